#include "freehyper/gns_rep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace freehyper::gns {

Eigen::MatrixXcd left_regular_matrix(const spin::SpinElement& a,
                                     const spin::SignFunction& sf, int cap) {
  if (!(a.dims() == sf.dims()))
    throw std::invalid_argument("left_regular_matrix: mismatched sign function");
  const int N = sf.dims().total();
  if (N > cap) throw std::invalid_argument("left_regular_matrix: dimension cap exceeded");
  const std::size_t dim = std::size_t{1} << N;
  Eigen::MatrixXcd L = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t b = 0; b < dim; ++b) {
    const spin::WordMask mb = static_cast<spin::WordMask>(b);
    for (const auto& [ma, c] : a.terms()) {
      const int sign = spin::product_sign(ma, mb, sf);
      L(static_cast<Eigen::Index>(ma ^ mb), static_cast<Eigen::Index>(b)) +=
          c * static_cast<double>(sign);
    }
  }
  return L;
}

double lp_norm_spectral(const spin::SpinElement& a, const spin::SignFunction& sf,
                        double p, int cap) {
  if (p < 1.0) throw std::invalid_argument("lp_norm_spectral: p must be >= 1");
  const Eigen::MatrixXcd L = left_regular_matrix(a, sf, cap);
  const Eigen::VectorXd sv = L.jacobiSvd().singularValues();
  if (std::isinf(p)) return sv.size() ? sv(0) : 0.0;
  double acc = 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) acc += std::pow(sv(i), p);
  return std::pow(acc / static_cast<double>(sv.size()), 1.0 / p);
}

namespace {

// Jacobi (three-term recurrence) coefficients from the upper Cholesky factor
// of the Hankel moment matrix; stops where positivity is numerically lost.
struct Recurrence {
  std::vector<long double> alpha;  // size K
  std::vector<long double> beta;   // size K-1, off-diagonal entries
};

Recurrence recurrence_from_moments(const std::vector<double>& moments, int K) {
  const int rows = K + 1;
  if (static_cast<int>(moments.size()) < 2 * K + 1)
    throw std::invalid_argument("quadrature: need moments up to order 2K");
  if (moments[0] <= 0.0) throw std::invalid_argument("quadrature: m0 must be positive");

  std::vector<long double> R(static_cast<std::size_t>(rows) * rows, 0.0L);
  const auto at = [&R, rows](int i, int j) -> long double& { return R[i * rows + j]; };
  int usable = 0;
  for (int i = 0; i < rows; ++i) {
    long double pivot = static_cast<long double>(moments[2 * i]);
    for (int k = 0; k < i; ++k) pivot -= at(k, i) * at(k, i);
    // relative pivot test: below this the row carries no significant digits
    if (!(pivot > static_cast<long double>(moments[2 * i]) * 1e-28L) || pivot <= 0.0L)
      break;
    at(i, i) = sqrtl(pivot);
    for (int j = i + 1; j < rows; ++j) {
      long double v = static_cast<long double>(moments[i + j]);
      for (int k = 0; k < i; ++k) v -= at(k, i) * at(k, j);
      at(i, j) = v / at(i, i);
    }
    usable = i + 1;
  }
  // r usable Cholesky rows support an r-node rule (row j reaches column j+1);
  // rank deficiency below K+1 means the measure has exactly `usable` atoms
  const int n = std::min(usable, K);
  Recurrence rec;
  if (n <= 0) return rec;
  rec.alpha.resize(n);
  rec.beta.resize(n - 1);
  for (int j = 0; j < n; ++j) {
    long double a = at(j, j + 1) / at(j, j);
    if (j > 0) a -= at(j - 1, j) / at(j - 1, j - 1);
    rec.alpha[j] = a;
    if (j > 0) rec.beta[j - 1] = at(j, j) / at(j - 1, j - 1);
  }
  return rec;
}

SpectralMeasure measure_from_recurrence(const Recurrence& rec, double m0) {
  SpectralMeasure out;
  const int n = static_cast<int>(rec.alpha.size());
  if (n == 0) return out;
  Eigen::VectorXd diag(n), subdiag(std::max(n - 1, 0));
  for (int i = 0; i < n; ++i) diag(i) = static_cast<double>(rec.alpha[i]);
  for (int i = 0; i + 1 < n; ++i) subdiag(i) = static_cast<double>(rec.beta[i]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, subdiag);
  for (int i = 0; i < n; ++i) {
    const double w = m0 * es.eigenvectors()(0, i) * es.eigenvectors()(0, i);
    out.atoms.emplace_back(es.eigenvalues()(i), w);
  }
  return out;
}

}  // namespace

SpectralMeasure quadrature_from_moments(const std::vector<double>& moments, int K,
                                        int* achieved_K) {
  if (K < 1) throw std::invalid_argument("quadrature: K must be >= 1");
  Recurrence rec = recurrence_from_moments(moments, K);
  if (achieved_K) *achieved_K = static_cast<int>(rec.alpha.size());
  return measure_from_recurrence(rec, moments[0]);
}

namespace {

double quadrature_lp(const SpectralMeasure& mu, double p) {
  double acc = 0.0;
  for (const auto& [node, w] : mu.atoms)
    acc += w * std::pow(std::max(node, 0.0), p / 2.0);
  return std::pow(acc, 1.0 / p);
}

}  // namespace

QuadratureResult lp_norm_moments(const std::vector<double>& moments, double p, int K) {
  if (p < 1.0) throw std::invalid_argument("lp_norm_moments: p must be >= 1");
  if (std::isinf(p))
    throw std::invalid_argument("lp_norm_moments: p = infinity needs the spectral route");
  QuadratureResult res;
  int achieved = 0;
  const SpectralMeasure mu = quadrature_from_moments(moments, K, &achieved);
  res.achieved_K = achieved;
  if (achieved == 0) throw std::invalid_argument("lp_norm_moments: no usable nodes");
  res.value = quadrature_lp(mu, p);
  if (achieved < K) {
    // rank-deficient Hankel: the measure is exactly this finite atom set
    res.stabilization = 0.0;
  } else if (achieved >= 2) {
    const SpectralMeasure prev = quadrature_from_moments(moments, achieved - 1, nullptr);
    res.stabilization = std::abs(res.value - quadrature_lp(prev, p));
  } else {
    res.stabilization = std::numeric_limits<double>::infinity();
  }
  return res;
}

std::vector<double> spin_moments(const spin::SpinElement& a,
                                 const spin::SignFunction& sf, int count) {
  std::vector<double> out;
  out.reserve(count + 1);
  const spin::SpinElement b = multiply(adjoint(a, sf), a, sf);
  spin::SpinElement pow = spin::SpinElement::unit(a.dims());
  out.push_back(1.0);
  for (int k = 1; k <= count; ++k) {
    pow = multiply(pow, b, sf);
    out.push_back(trace(pow).real());
  }
  return out;
}

}  // namespace freehyper::gns
