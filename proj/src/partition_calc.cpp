#include "freehyper/partition_calc.hpp"

#include <cmath>
#include <cstdint>

namespace freehyper::partition {

WeightFunction::WeightFunction(int n, std::vector<double> table)
    : n_(n), table_(std::move(table)) {
  if (n <= 0) throw std::invalid_argument("WeightFunction: n must be positive");
  if (static_cast<int>(table_.size()) != n * n)
    throw std::invalid_argument("WeightFunction: table size mismatch");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const double v = table_[a * n + b];
      if (!(v >= -1.0 && v <= 1.0))
        throw std::invalid_argument("WeightFunction: values must lie in [-1,1]");
      if (v != table_[b * n + a])
        throw std::invalid_argument("WeightFunction: table must be symmetric");
    }
}

WeightFunction WeightFunction::free_clifford(int n) {
  std::vector<double> table(static_cast<std::size_t>(n) * n, 0.0);
  for (int a = 0; a < n; ++a) table[a * n + a] = -1.0;
  return WeightFunction(n, std::move(table));
}

WeightFunction WeightFunction::constant(int n, double q) {
  return WeightFunction(n, std::vector<double>(static_cast<std::size_t>(n) * n, q));
}

bool WeightFunction::integer_valued() const {
  for (double v : table_)
    if (v != -1.0 && v != 0.0 && v != 1.0) return false;
  return true;
}

namespace {

// Recursive enumeration: always pair the smallest unpaired position with each
// larger unpaired candidate, ascending. `keep` may reject a candidate pair
// before descending.
template <class Keep, class Emit>
void enumerate_impl(int s, std::vector<std::pair<int, int>>& stack,
                    std::vector<bool>& used, const Keep& keep, const Emit& emit,
                    bool& stop) {
  if (stop) return;
  int e = 0;
  while (e < s && used[e]) ++e;
  if (e == s) {
    if (!emit(stack)) stop = true;
    return;
  }
  used[e] = true;
  for (int z = e + 1; z < s && !stop; ++z) {
    if (used[z] || !keep(e, z)) continue;
    used[z] = true;
    stack.emplace_back(e, z);
    enumerate_impl(s, stack, used, keep, emit, stop);
    stack.pop_back();
    used[z] = false;
  }
  used[e] = false;
}

template <class Keep, class Emit>
void enumerate_matchings(int s, const Keep& keep, const Emit& emit) {
  if (s < 0 || s % 2 != 0) return;
  std::vector<std::pair<int, int>> stack;
  stack.reserve(s / 2);
  std::vector<bool> used(s, false);
  bool stop = false;
  enumerate_impl(s, stack, used, keep, emit, stop);
}

}  // namespace

std::vector<PairPartition> enumerate_pair_partitions(int s) {
  std::vector<PairPartition> out;
  enumerate_matchings(
      s, [](int, int) { return true; },
      [&out](const std::vector<std::pair<int, int>>& pairs) {
        out.push_back(PairPartition{pairs});
        return true;
      });
  return out;
}

void for_each_pair_partition(int s,
                             const std::function<bool(const PairPartition&)>& visit) {
  enumerate_matchings(
      s, [](int, int) { return true; },
      [&visit](const std::vector<std::pair<int, int>>& pairs) {
        return visit(PairPartition{pairs});
      });
}

CrossingSets crossing_sets(const PairPartition& sigma, const std::vector<int>* alphas) {
  if (alphas) {
    for (const auto& [e, z] : sigma.pairs) {
      if (e < 0 || z >= static_cast<int>(alphas->size()))
        throw std::invalid_argument("crossing_sets: labels shorter than partition");
      if ((*alphas)[e] != (*alphas)[z])
        throw std::invalid_argument("crossing_sets: labels not constant on blocks");
    }
  }
  CrossingSets out;
  const auto& p = sigma.pairs;
  for (std::size_t k = 0; k < p.size(); ++k)
    for (std::size_t l = k + 1; l < p.size(); ++l) {
      // openers are sorted, so p[k].first < p[l].first always holds
      if (p[l].first < p[k].second && p[k].second < p[l].second) {
        out.crossings.emplace_back(static_cast<int>(k), static_cast<int>(l));
        if (alphas && (*alphas)[p[k].first] != (*alphas)[p[l].first])
          out.alpha_crossings.emplace_back(static_cast<int>(k), static_cast<int>(l));
      }
    }
  return out;
}

double weighted_pair_moment(const WordSpec& word, const WeightFunction& f) {
  const int s = word.length();
  if (s % 2 != 0) return 0.0;
  for (const auto& [alpha, i] : word.letters)
    if (alpha < 0 || alpha >= f.blocks() || i < 0)
      throw std::invalid_argument("weighted_pair_moment: letter label out of range");

  const bool exact = f.integer_valued();
  double sum = 0.0;
  std::int64_t isum = 0;
  // sigma <= sigma(i) and sigma <= sigma(alpha): paired letters must carry
  // identical (alpha, i) labels.
  const auto keep = [&word](int e, int z) {
    return word.letters[e] == word.letters[z];
  };
  enumerate_matchings(s, keep, [&](const std::vector<std::pair<int, int>>& pairs) {
    double w = 1.0;
    std::int64_t iw = 1;
    for (std::size_t k = 0; k < pairs.size() && (exact ? iw != 0 : w != 0.0); ++k)
      for (std::size_t l = k + 1; l < pairs.size(); ++l)
        if (pairs[l].first < pairs[k].second && pairs[k].second < pairs[l].second) {
          const double v = f(word.letters[pairs[k].first].first,
                             word.letters[pairs[l].first].first);
          if (exact)
            iw *= static_cast<std::int64_t>(v);
          else
            w *= v;
        }
    if (exact)
      isum += iw;
    else
      sum += w;
    return true;
  });
  return exact ? static_cast<double>(isum) : sum;
}

}  // namespace freehyper::partition
