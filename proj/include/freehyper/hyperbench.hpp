#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "freehyper/group_words.hpp"
#include "freehyper/spin_core.hpp"

namespace freehyper::hyperbench {

using cplx = std::complex<double>;

struct Margin {
  double lhs = 0.0;
  double rhs = 0.0;
  double tol = 0.0;

  double margin() const { return lhs - rhs; }
  bool pass() const { return margin() <= tol; }
};

enum class TimeRule { Optimal, Doubled, Improvement, Explicit };

/// Threshold times of the three contractivity regimes.
double optimal_time(double p, double q);                   // 0.5 log((q-1)/(p-1))
double doubled_time(double p, double q);                   // log((q-1)/(p-1))
double improvement_time(double p);                         // q = 2 improved rate
double resolve_time(TimeRule rule, double p, double q, double explicit_t = 0.0);

/// ||S_t f||_q vs ||f||_p in a spin algebra, both norms by the spectral route.
Margin hc_margin_spin(const spin::SpinElement& f, const spin::SignFunction& sf,
                      double p, double q, double t, double tol = 1e-9);

/// Same for a group-algebra element under the free Poisson semigroup, both
/// norms by moment quadrature. Fails (sets *conclusive=false) when the
/// quadrature stabilization exceeds `stab_gate` on either side.
Margin hc_margin_group(const group::GroupAlgebraElement& f, double p, double q,
                       double t, int quad_K = 10, double tol = 1e-6,
                       double stab_gate = 1e-8, bool* conclusive = nullptr);

struct SharpnessWitness {
  bool found = false;
  double delta = 0.0;
  double margin = 0.0;
};

/// Scans f = 1 + delta * x on the two-point space for a contractivity
/// violation at t = t_factor * optimal_time(p, q); exact closed forms.
SharpnessWitness sharpness_probe(double p, double q, double t_factor,
                                 const std::vector<double>& delta_grid);

/// Worst margin of the normalized two-point inequality
/// (avg_{e=+-1} |(1+e r)a + (1-e r)b|^q / 2^q)^{1/q} <= ((|a|^p + |b|^p)/2)^{1/p}
/// over a grid of complex coefficient pairs (a fixed real, b on a disk grid).
double two_point_scan(double p, double q, double r, int grid = 50);

/// Ball-Carlen-Lieb convexity: the average ((Tr|A+B|^p + Tr|A-B|^p)/2)^{2/p}
/// dominates the bound (Tr|A|^p)^{2/p} + (p-1)(Tr|B|^p)^{2/p}. Returned as
/// Margin{lhs=bound, rhs=average} so margin() <= tol is the pass condition.
Margin bcl_check(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B, double p,
                 double tol = 1e-10);

/// |  ||sum rho_j x_j||_p - ||rho||_2 | for anticommuting generators.
double khintchine_check(const std::vector<double>& coeffs, double p);

/// f = a0 + sum_j (a_j u_j + b_j u_j*): lhs = ||P_t f||_2 by the exact
/// coefficient formula at t = -0.5 log(p-1); rhs = ||f||_p by quadrature.
Margin w1_check(cplx a0, const std::vector<cplx>& a, const std::vector<cplx>& b,
                double p, int quad_K = 10, double tol = 1e-6);

/// q = 2 contraction at the improvement time: lhs = exact l2 norm of the
/// evolved coefficients, rhs = ||f||_p by quadrature.
Margin improvement_time_check(const group::GroupAlgebraElement& f, double p,
                              int quad_K = 10, double tol = 1e-6,
                              double stab_gate = 1e-8, bool* conclusive = nullptr);

/// Worst value over the grid of
/// 0.5 log(1/(p-1)) + 0.5 (1/p - 1/2) log 2 - (beta/2) log(1/(p-1)),
/// beta = 1 + log(2)/4. Negative everywhere on (1,2).
double beta_scan(const std::vector<double>& p_grid);
std::vector<double> beta_default_grid();  // 10^4 points in (1.0001, 2]

/// Reproducible random elements: i.i.d. standard complex normal coefficients
/// on the declared word set; self_adjoint symmetrizes (f + f*)/2.
spin::SpinElement random_spin_element(const spin::SignFunction& sf, int max_degree,
                                      std::uint64_t seed, bool self_adjoint);
group::GroupAlgebraElement random_group_element(group::Flavor flavor, int n,
                                                int max_length, std::uint64_t seed,
                                                bool self_adjoint);

}  // namespace freehyper::hyperbench
