#include "freehyper/hyperbench.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "freehyper/gns_rep.hpp"

namespace freehyper::hyperbench {

namespace {

void check_pq(double p, double q) {
  if (!(p > 1.0) || !(q >= p) || !std::isfinite(q))
    throw std::invalid_argument("time rule requires 1 < p <= q < infinity");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Deterministic standard complex normal stream (Box-Muller on counter hashes).
class GaussStream {
 public:
  explicit GaussStream(std::uint64_t seed) : seed_(seed) {}

  cplx next() {
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(std::max(u1, 1e-300)));
    // variance 1 in total: each real part N(0, 1/2)
    return {r * std::cos(2.0 * std::numbers::pi * u2) / std::sqrt(2.0),
            r * std::sin(2.0 * std::numbers::pi * u2) / std::sqrt(2.0)};
  }

 private:
  double uniform() {
    const std::uint64_t h = splitmix64(seed_ ^ splitmix64(counter_++));
    return static_cast<double>(h >> 11) * 0x1.0p-53;
  }
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

double schatten_p_sum(const Eigen::MatrixXcd& M, double p) {
  const Eigen::VectorXd sv = M.jacobiSvd().singularValues();
  double acc = 0.0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) acc += std::pow(sv(i), p);
  return acc;
}

double two_point_norm(double delta, double ex) {
  // ((|1+d|^e + |1-d|^e)/2)^{1/e}
  return std::pow(0.5 * (std::pow(std::abs(1.0 + delta), ex) +
                         std::pow(std::abs(1.0 - delta), ex)),
                  1.0 / ex);
}

}  // namespace

double optimal_time(double p, double q) {
  check_pq(p, q);
  return 0.5 * std::log((q - 1.0) / (p - 1.0));
}

double doubled_time(double p, double q) {
  check_pq(p, q);
  return std::log((q - 1.0) / (p - 1.0));
}

double improvement_time(double p) {
  if (!(p > 1.0 && p <= 2.0))
    throw std::invalid_argument("improvement_time: p must lie in (1,2]");
  return 0.5 * std::log(1.0 / (p - 1.0)) +
         0.5 * (1.0 / p - 0.5) * std::numbers::ln2;
}

double resolve_time(TimeRule rule, double p, double q, double explicit_t) {
  switch (rule) {
    case TimeRule::Optimal: return optimal_time(p, q);
    case TimeRule::Doubled: return doubled_time(p, q);
    case TimeRule::Improvement: return improvement_time(p);
    case TimeRule::Explicit: return explicit_t;
  }
  throw std::invalid_argument("resolve_time: unknown rule");
}

Margin hc_margin_spin(const spin::SpinElement& f, const spin::SignFunction& sf,
                      double p, double q, double t, double tol) {
  Margin m;
  m.tol = tol;
  m.lhs = gns::lp_norm_spectral(spin::ou_semigroup(f, t), sf, q);
  m.rhs = gns::lp_norm_spectral(f, sf, p);
  return m;
}

Margin hc_margin_group(const group::GroupAlgebraElement& f, double p, double q,
                       double t, int quad_K, double tol, double stab_gate,
                       bool* conclusive) {
  Margin m;
  m.tol = tol;
  const group::GroupLpResult lhs =
      group::group_lp_norm(group::poisson_semigroup(f, t), q, quad_K);
  const group::GroupLpResult rhs = group::group_lp_norm(f, p, quad_K);
  m.lhs = lhs.value;
  m.rhs = rhs.value;
  if (conclusive)
    *conclusive = lhs.stabilization <= stab_gate && rhs.stabilization <= stab_gate;
  return m;
}

SharpnessWitness sharpness_probe(double p, double q, double t_factor,
                                 const std::vector<double>& delta_grid) {
  if (!(p > 1.0 && q > p)) throw std::invalid_argument("sharpness_probe: need 1 < p < q");
  const double t = t_factor * optimal_time(p, q);
  const double shrink = std::exp(-t);
  SharpnessWitness w;
  for (double delta : delta_grid) {
    const double lhs = two_point_norm(shrink * delta, q);
    const double rhs = two_point_norm(delta, p);
    if (lhs - rhs > 0.0) {
      w.found = true;
      w.delta = delta;
      w.margin = lhs - rhs;
      return w;
    }
  }
  return w;
}

double two_point_scan(double p, double q, double r, int grid) {
  if (!(r >= 0.0 && r <= 1.0)) throw std::invalid_argument("two_point_scan: r in [0,1]");
  // alpha = 1 by scaling and global phase; beta sweeps a complex square
  double worst = -std::numeric_limits<double>::infinity();
  for (int ix = 0; ix < grid; ++ix)
    for (int iy = 0; iy < grid; ++iy) {
      const double x = -1.5 + 3.0 * ix / (grid - 1);
      const double y = -1.5 + 3.0 * iy / (grid - 1);
      const cplx beta{x, y};
      const cplx alpha{1.0, 0.0};
      double lhs_acc = 0.0;
      for (int e = -1; e <= 1; e += 2)
        lhs_acc += std::pow(std::abs((1.0 + e * r) * alpha + (1.0 - e * r) * beta), q);
      const double lhs = std::pow(lhs_acc, 1.0 / q) / std::pow(2.0, 1.0 + 1.0 / q);
      const double rhs =
          std::pow(0.5 * (std::pow(std::abs(alpha), p) + std::pow(std::abs(beta), p)),
                   1.0 / p);
      worst = std::max(worst, lhs - rhs);
    }
  return worst;
}

Margin bcl_check(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B, double p,
                 double tol) {
  if (A.rows() != B.rows() || A.cols() != B.cols())
    throw std::invalid_argument("bcl_check: shape mismatch");
  if (!(p >= 1.0 && p <= 2.0)) throw std::invalid_argument("bcl_check: p in [1,2]");
  Margin m;
  m.tol = tol;
  // Uniform convexity bounds the average from below, so the reported margin is
  // bound minus average (pass when nonpositive).
  m.lhs = std::pow(schatten_p_sum(A, p), 2.0 / p) +
          (p - 1.0) * std::pow(schatten_p_sum(B, p), 2.0 / p);
  m.rhs = std::pow(0.5 * (schatten_p_sum(A + B, p) + schatten_p_sum(A - B, p)), 2.0 / p);
  return m;
}

double khintchine_check(const std::vector<double>& coeffs, double p) {
  const int d = static_cast<int>(coeffs.size());
  if (d == 0) return 0.0;
  const spin::SignFunction sf = spin::SignFunction::all_anticommute({1, d, 1});
  spin::SpinElement f({1, d, 1});
  for (int j = 0; j < d; ++j)
    f.add_term(spin::WordMask{1} << j, coeffs[j]);
  double euclid = 0.0;
  for (double c : coeffs) euclid += c * c;
  euclid = std::sqrt(euclid);
  return std::abs(gns::lp_norm_spectral(f, sf, p) - euclid);
}

Margin w1_check(cplx a0, const std::vector<cplx>& a, const std::vector<cplx>& b,
                double p, int quad_K, double tol) {
  if (!(p > 1.0 && p <= 2.0)) throw std::invalid_argument("w1_check: p in (1,2]");
  if (a.size() != b.size()) throw std::invalid_argument("w1_check: coefficient size mismatch");
  const int n = static_cast<int>(a.size());
  group::GroupAlgebraElement f(group::Flavor::Free);
  f.add_term(group::GroupWord::identity(group::Flavor::Free), a0);
  for (int j = 0; j < n; ++j) {
    f.add_term(group::GroupWord::generator(group::Flavor::Free, j + 1), a[j]);
    f.add_term(group::GroupWord::generator(group::Flavor::Free, -(j + 1)), b[j]);
  }
  // t = -0.5 log(p-1): e^{-2t} = p-1, and ||P_t f||_2 is exact on coefficients
  double word_mass = 0.0;
  for (int j = 0; j < n; ++j) word_mass += std::norm(a[j]) + std::norm(b[j]);
  Margin m;
  m.tol = tol;
  m.lhs = std::sqrt(std::norm(a0) + (p - 1.0) * word_mass);
  m.rhs = group::group_lp_norm(f, p, quad_K).value;
  return m;
}

Margin improvement_time_check(const group::GroupAlgebraElement& f, double p,
                              int quad_K, double tol, double stab_gate,
                              bool* conclusive) {
  if (f.flavor() != group::Flavor::Free)
    throw std::invalid_argument("improvement_time_check: free-group elements only");
  const double t = improvement_time(p);
  double l2_sq = 0.0;
  for (const auto& [w, c] : f.terms())
    l2_sq += std::norm(c) * std::exp(-2.0 * t * w.length());
  const group::GroupLpResult rhs = group::group_lp_norm(f, p, quad_K);
  if (conclusive) *conclusive = rhs.stabilization <= stab_gate;
  Margin m;
  m.tol = tol;
  m.lhs = std::sqrt(l2_sq);
  m.rhs = rhs.value;
  return m;
}

double beta_scan(const std::vector<double>& p_grid) {
  double worst = -std::numeric_limits<double>::infinity();
  for (double p : p_grid) {
    if (!(p > 1.0 && p <= 2.0))
      throw std::invalid_argument("beta_scan: grid must lie in (1,2]");
    // lhs - rhs = log2 * [ log(p-1)/8 + (2-p)/(4p) ], written with log1p so
    // the cancellation at p = 2 is exact
    const double value =
        std::numbers::ln2 * (std::log1p(p - 2.0) / 8.0 + (2.0 - p) / (4.0 * p));
    worst = std::max(worst, value);
  }
  return worst;
}

std::vector<double> beta_default_grid() {
  std::vector<double> grid;
  const int count = 10000;
  grid.reserve(count);
  for (int i = 0; i < count; ++i)
    grid.push_back(1.0001 + (2.0 - 1.0001) * (i + 1) / count);
  return grid;
}

spin::SpinElement random_spin_element(const spin::SignFunction& sf, int max_degree,
                                      std::uint64_t seed, bool self_adjoint) {
  const int N = sf.dims().total();
  if (N > 20) throw std::invalid_argument("random_spin_element: dimension too large");
  GaussStream gauss(seed);
  spin::SpinElement f(sf.dims());
  for (spin::WordMask mask = 0; mask < (spin::WordMask{1} << N); ++mask)
    if (std::popcount(mask) <= max_degree) f.add_term(mask, gauss.next());
  if (self_adjoint) {
    spin::SpinElement star = adjoint(f, sf);
    f += star;
    f *= 0.5;
  }
  return f;
}

group::GroupAlgebraElement random_group_element(group::Flavor flavor, int n,
                                                int max_length, std::uint64_t seed,
                                                bool self_adjoint) {
  GaussStream gauss(seed);
  group::GroupAlgebraElement f(flavor);
  // reduced words in length-lexicographic order via breadth-first extension
  std::vector<group::GroupWord> frontier{group::GroupWord::identity(flavor)};
  f.add_term(frontier[0], gauss.next());
  std::vector<int> letters;
  if (flavor == group::Flavor::Free) {
    for (int j = 1; j <= n; ++j) {
      letters.push_back(j);
      letters.push_back(-j);
    }
  } else {
    for (int j = 1; j <= n; ++j) letters.push_back(j);
  }
  for (int len = 1; len <= max_length; ++len) {
    std::vector<group::GroupWord> next;
    for (const auto& w : frontier)
      for (int j : letters) {
        group::GroupWord ext = w * group::GroupWord::generator(flavor, j);
        if (ext.length() != len) continue;  // cancellation: not a fresh word
        next.push_back(ext);
        f.add_term(next.back(), gauss.next());
      }
    frontier = std::move(next);
  }
  if (self_adjoint) {
    group::GroupAlgebraElement star = adjoint(f);
    f += star;
    f *= 0.5;
  }
  return f;
}

}  // namespace freehyper::hyperbench
