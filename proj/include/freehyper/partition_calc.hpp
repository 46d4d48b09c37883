#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace freehyper::partition {

/// Perfect matching of {0,...,s-1}: pairs (e_j, z_j) with e_j < z_j,
/// sorted by opener so e_0 < e_1 < ... .
struct PairPartition {
  std::vector<std::pair<int, int>> pairs;

  int size() const { return static_cast<int>(pairs.size()) * 2; }
};

/// Word of length s over [n] x [d] letters.
struct WordSpec {
  std::vector<std::pair<int, int>> letters;  // (alpha, i), 0-based

  int length() const { return static_cast<int>(letters.size()); }
};

/// Symmetric weight on pairs of factor labels, values in [-1, 1].
class WeightFunction {
 public:
  WeightFunction(int n, std::vector<double> table);

  /// f(alpha,alpha) = -1, f(alpha,beta) = 0: the free product of Clifford
  /// algebras (every cross-factor crossing kills the pairing).
  static WeightFunction free_clifford(int n);
  /// Constant weight q on every pair (q-gaussian moments on a single block).
  static WeightFunction constant(int n, double q);

  double operator()(int alpha, int beta) const { return table_[alpha * n_ + beta]; }
  int blocks() const { return n_; }
  bool integer_valued() const;

 private:
  int n_;
  std::vector<double> table_;
};

/// All perfect matchings of {0,...,s-1} in the canonical order: pair the
/// smallest free element with each larger candidate, ascending. Empty for odd
/// s (one empty partition for s = 0).
std::vector<PairPartition> enumerate_pair_partitions(int s);

/// Streaming variant; visitor may return false to stop early.
void for_each_pair_partition(int s, const std::function<bool(const PairPartition&)>& visit);

struct CrossingSets {
  std::vector<std::pair<int, int>> crossings;        // (k,l): e_k < e_l < z_k < z_l
  std::vector<std::pair<int, int>> alpha_crossings;  // subset with alpha_{e_k} != alpha_{e_l}
};

/// Crossing set of sigma, and (when block labels are given) the subset of
/// crossings joining distinct labels. Labels must be constant on blocks.
CrossingSets crossing_sets(const PairPartition& sigma,
                           const std::vector<int>* alphas = nullptr);

/// Limit moment of x_{i_1}^{a_1} ... x_{i_s}^{a_s}: sum over pair partitions
/// refining both label partitions of the product of f over crossings.
/// Exact integer arithmetic when f takes values in {-1, 0, 1}.
double weighted_pair_moment(const WordSpec& word, const WeightFunction& f);

}  // namespace freehyper::partition
