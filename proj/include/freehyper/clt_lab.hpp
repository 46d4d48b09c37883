#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "freehyper/group_words.hpp"
#include "freehyper/partition_calc.hpp"
#include "freehyper/spin_core.hpp"

namespace freehyper::clt {

/// Random sign model on n blocks of d generators with m copies each.
/// Cross-pair signs are independent with P(+1) = (1 + bias(alpha,beta))/2;
/// pairs inside a block whose bias entry is -1 are deterministically -1.
struct SignModel {
  int n = 1, d = 1, m = 1;
  partition::WeightFunction bias;
  std::uint64_t rng_seed = 0;

  /// Within-block bias -1, cross-block bias 0 (fair coin).
  static SignModel theorem_b(int n, int d, int m, std::uint64_t seed);
};

struct TrialReport {
  int m = 0;
  int trials = 0;
  double mean = 0.0;
  double std_error = 0.0;
  double target = 0.0;

  double abs_error() const { return mean > target ? mean - target : target - mean; }
};

std::string trial_reports_csv(const std::vector<TrialReport>& reports);

/// Deterministic counter-based stream: identical (seed, trial_index) always
/// produces the identical table, independent of evaluation order.
spin::SignFunction sample_sign_function(const SignModel& model,
                                        std::uint64_t trial_index);

/// Monte Carlo moments of mixed generators: per trial samples a sign function,
/// forms x~_i^alpha(m) = m^{-1/2} sum_k x_i^alpha(k), and takes the exact
/// trace of the word product. Target is the closed-form limit moment.
std::vector<TrialReport> mc_moment_study(const partition::WordSpec& word,
                                         const SignModel& model,
                                         const std::vector<int>& m_list, int trials);

/// Exact expectation of the word trace at finite m by enumerating every
/// random sign configuration; only feasible for n*d*m <= 4.
double exact_moment_enumeration(const partition::WordSpec& word,
                                const SignModel& model, int m);

struct KeyLemmaReport {
  int m = 0;
  int trials = 0;
  double max_abs_inner = 0.0;     // max |<x1, x2>| over samples (0 exactly)
  double mean_norm1_sq = 0.0;     // sample mean of ||x1||_2^2
  double stderr_norm1_sq = 0.0;
  double exact_norm1_sq = 0.0;    // m(m-1)...(m-s+1)/m^s
  double mean_norm2_sq = 0.0;     // sample mean of ||x2||_2^2
};

/// Decomposition statistics of the lift of a reduced Z2-product word:
/// x~ = x1 (all copy indices distinct) + x2 (the rest).
KeyLemmaReport key_lemma_study(const partition::WordSpec& word, const SignModel& model,
                               int m, int trials);

/// Convergence of ||z~(m)||_p (spectral route on the lifted element) to the
/// group-algebra norm; t > 0 compares the semigroup-evolved quantities
/// ||S_t z~(m)||_p against ||P_t a||_p.
std::vector<TrialReport> norm_convergence_study(const group::GroupAlgebraElement& a,
                                                double p,
                                                const std::vector<int>& m_list,
                                                int trials, std::uint64_t seed,
                                                double t = 0.0, int quad_K = 10);

}  // namespace freehyper::clt
