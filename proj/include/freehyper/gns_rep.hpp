#pragma once

#include <Eigen/Dense>
#include <vector>

#include "freehyper/spin_core.hpp"

namespace freehyper::gns {

/// Quadrature rule: atoms (node, weight) of a discrete measure.
struct SpectralMeasure {
  std::vector<std::pair<double, double>> atoms;
};

struct QuadratureResult {
  double value = 0.0;
  double stabilization = 0.0;  // |value_K - value_{K-1}|
  int achieved_K = 0;          // nodes actually used (may be < requested)
};

/// Dense matrix of left multiplication by `a` on the 2^N word basis,
/// N = n*d*m. Column for basis word x_B holds the coefficients of a * x_B.
Eigen::MatrixXcd left_regular_matrix(const spin::SpinElement& a,
                                     const spin::SignFunction& sf, int cap = 12);

/// (2^{-N} sum s_i^p)^{1/p} over singular values of the left-regular matrix.
/// p = infinity returns the largest singular value (operator norm).
double lp_norm_spectral(const spin::SpinElement& a, const spin::SignFunction& sf,
                        double p, int cap = 12);

/// Gauss quadrature of the measure with the given moments (m_k = integral of
/// x^k, k = 0..2K), via the orthogonal-polynomial three-term recurrence and
/// the symmetric tridiagonal eigenproblem. Extended-precision Cholesky of the
/// Hankel matrix; if positivity fails early, the rule uses the largest usable
/// node count and reports it.
SpectralMeasure quadrature_from_moments(const std::vector<double>& moments, int K,
                                        int* achieved_K = nullptr);

/// ||a||_p from the moments of a*a: value = (sum w_i lambda_i^{p/2})^{1/p}
/// at K nodes; stabilization compares against the (K-1)-node value.
QuadratureResult lp_norm_moments(const std::vector<double>& moments, double p, int K);

/// Exact moments tau((a*a)^k), k = 0..count, by repeated multiplication.
std::vector<double> spin_moments(const spin::SpinElement& a,
                                 const spin::SignFunction& sf, int count);

}  // namespace freehyper::gns
