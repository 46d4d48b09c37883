#include <doctest.h>

#include <cmath>
#include <vector>

#include "freehyper/partition_calc.hpp"

using namespace freehyper::partition;

namespace {

long double double_factorial(int s) {  // (s-1)!! for even s
  long double v = 1.0L;
  for (int k = s - 1; k > 1; k -= 2) v *= k;
  return v;
}

long catalan(int k) {
  long c = 1;
  for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

WordSpec repeated_letter(int alpha, int i, int s) {
  WordSpec w;
  for (int j = 0; j < s; ++j) w.letters.emplace_back(alpha, i);
  return w;
}

}  // namespace

TEST_CASE("pair partition counts are (s-1)!!") {
  CHECK(enumerate_pair_partitions(0).size() == 1);
  CHECK(enumerate_pair_partitions(1).empty());
  CHECK(enumerate_pair_partitions(2).size() == 1);
  CHECK(enumerate_pair_partitions(4).size() == 3);
  CHECK(enumerate_pair_partitions(6).size() == 15);
  CHECK(enumerate_pair_partitions(8).size() == 105);
  CHECK(enumerate_pair_partitions(10).size() == 945);
}

TEST_CASE("partitions are canonical and streaming agrees with enumeration") {
  const auto all = enumerate_pair_partitions(6);
  for (const auto& sigma : all) {
    int prev_opener = -1;
    for (const auto& [e, z] : sigma.pairs) {
      CHECK(e < z);
      CHECK(e > prev_opener);
      prev_opener = e;
    }
  }
  std::size_t seen = 0;
  for_each_pair_partition(6, [&](const PairPartition& sigma) {
    CHECK(sigma.pairs == all[seen].pairs);
    ++seen;
    return true;
  });
  CHECK(seen == all.size());
  // Early stop.
  seen = 0;
  for_each_pair_partition(6, [&](const PairPartition&) { return ++seen < 4; });
  CHECK(seen == 4);
}

TEST_CASE("crossing sets on known matchings") {
  PairPartition nested{{{0, 3}, {1, 2}}};
  CHECK(crossing_sets(nested).crossings.empty());
  PairPartition crossed{{{0, 2}, {1, 3}}};
  const auto cs = crossing_sets(crossed);
  REQUIRE(cs.crossings.size() == 1);
  CHECK(cs.crossings[0] == std::pair<int, int>{0, 1});
  // Labels (0,1,0,1): the lone crossing joins distinct blocks.
  const std::vector<int> alphas{0, 1, 0, 1};
  CHECK(crossing_sets(crossed, &alphas).alpha_crossings.size() == 1);
  const std::vector<int> same{0, 0, 0, 0};
  CHECK(crossing_sets(crossed, &same).alpha_crossings.empty());
}

TEST_CASE("weight function validation and factories") {
  CHECK_THROWS_AS(WeightFunction(2, {0.0, 0.5, 0.6, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(WeightFunction(1, {1.5}), std::invalid_argument);
  const WeightFunction fc = WeightFunction::free_clifford(3);
  CHECK(fc(0, 0) == -1.0);
  CHECK(fc(0, 2) == 0.0);
  CHECK(fc.integer_valued());
  CHECK(WeightFunction::constant(2, 1.0).integer_valued());
  CHECK_FALSE(WeightFunction::constant(2, 0.5).integer_valued());
}

TEST_CASE("single-letter powers specialize to classical moment sequences") {
  for (int k = 1; k <= 4; ++k) {
    const WordSpec w = repeated_letter(0, 0, 2 * k);
    // f = 0 on the (single) block: only noncrossing partitions survive.
    CHECK(weighted_pair_moment(w, WeightFunction::constant(1, 0.0)) ==
          doctest::Approx(static_cast<double>(catalan(k))).epsilon(1e-14));
    // f = 1: every partition contributes 1.
    CHECK(weighted_pair_moment(w, WeightFunction::constant(1, 1.0)) ==
          doctest::Approx(static_cast<double>(double_factorial(2 * k))).epsilon(1e-14));
  }
  // Odd length vanishes.
  CHECK(weighted_pair_moment(repeated_letter(0, 0, 3),
                             WeightFunction::constant(1, 0.7)) == 0.0);
}

TEST_CASE("q-moment x^4 equals 2 + q") {
  for (double q : {-1.0, -0.3, 0.0, 0.5, 1.0})
    CHECK(weighted_pair_moment(repeated_letter(0, 0, 4),
                               WeightFunction::constant(1, q)) ==
          doctest::Approx(2.0 + q).epsilon(1e-14));
}

TEST_CASE("free-Clifford weight kills alternating cross-block words") {
  const WeightFunction f = WeightFunction::free_clifford(2);
  WordSpec abab{{{0, 0}, {1, 0}, {0, 0}, {1, 0}}};
  CHECK(weighted_pair_moment(abab, f) == 0.0);
  WordSpec abba{{{0, 0}, {1, 0}, {1, 0}, {0, 0}}};
  CHECK(weighted_pair_moment(abba, f) == 1.0);
  // Within one block, the Clifford diagonal gives the x^4 Clifford moment 1.
  CHECK(weighted_pair_moment(repeated_letter(0, 0, 4), f) == 1.0);
}

TEST_CASE("letters with distinct generator labels never pair") {
  const WeightFunction f = WeightFunction::constant(1, 1.0);
  WordSpec mixed{{{0, 0}, {0, 1}}};
  CHECK(weighted_pair_moment(mixed, f) == 0.0);
  WordSpec square{{{0, 0}, {0, 1}, {0, 1}, {0, 0}}};
  CHECK(weighted_pair_moment(square, f) == 1.0);
}

TEST_CASE("mixed-block weights factor over crossing labels") {
  // Two blocks with weights q1 within block 0, q2 within block 1, and r across.
  const double q1 = 0.25, q2 = -0.5, r = 0.75;
  const WeightFunction f(2, {q1, r, r, q2});
  // Independent oracle: enumerate matchings of the interleaved word
  // a a b b a b (block labels 0 0 1 1 0 1) and multiply crossing weights.
  WordSpec word{{{0, 0}, {0, 0}, {1, 0}, {1, 0}, {0, 0}, {1, 0}}};
  std::vector<int> alphas;
  for (const auto& [alpha, i] : word.letters) alphas.push_back(alpha);
  double expect = 0.0;
  for (const auto& sigma : enumerate_pair_partitions(6)) {
    bool ok = true;
    for (const auto& [e, z] : sigma.pairs)
      if (word.letters[e] != word.letters[z]) ok = false;
    if (!ok) continue;
    double w = 1.0;
    for (const auto& [k, l] : crossing_sets(sigma).crossings) {
      const int a = alphas[sigma.pairs[k].first];
      const int b = alphas[sigma.pairs[l].first];
      w *= f(a, b);
    }
    expect += w;
  }
  CHECK(weighted_pair_moment(word, f) == doctest::Approx(expect).epsilon(1e-14));
}
