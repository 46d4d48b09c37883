#include "freehyper/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "freehyper/clt_lab.hpp"
#include "freehyper/gns_rep.hpp"
#include "freehyper/group_words.hpp"
#include "freehyper/hyperbench.hpp"
#include "freehyper/partition_calc.hpp"
#include "freehyper/spin_core.hpp"

namespace freehyper::suites {

namespace {

using clock_type = std::chrono::steady_clock;
using nlohmann::json;

double ms_since(clock_type::time_point start) {
  return std::chrono::duration<double, std::milli>(clock_type::now() - start).count();
}

report::CheckRecord make_record(std::string check, json params, double lhs, double rhs,
                                double tol, bool pass, std::uint64_t seed,
                                double wall_ms) {
  report::CheckRecord r;
  r.check = std::move(check);
  r.params = params.dump();
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = lhs - rhs;
  r.tol = tol;
  r.pass = pass;
  r.seed = seed;
  r.wall_ms = wall_ms;
  return r;
}

// ---------------------------------------------------------------------------
// criterion 1: moment-formula oracle triangle
// ---------------------------------------------------------------------------

/// Group-algebra oracle: trace of z_{a1}...z_{as} in the Z2 free product.
long long z2_word_trace(const std::vector<int>& alphas) {
  std::vector<int> letters;
  letters.reserve(alphas.size());
  for (int a : alphas) letters.push_back(a + 1);
  return group::GroupWord(group::Flavor::FreeZ2, letters).is_identity() ? 1 : 0;
}

/// Spin-side oracle via normal ordering: sum over pairings of the exact sign
/// expectation of a representative copy tuple (copy j on pairing block j).
/// Cross-block transposed pairs must occur evenly; within-block transpositions
/// each contribute a deterministic -1.
long long spin_pattern_trace(const std::vector<int>& alphas, int n) {
  const int s = static_cast<int>(alphas.size());
  if (s % 2 != 0) return 0;
  if (s == 0) return 1;
  const int m = s / 2;
  const spin::SignFunction sf = spin::SignFunction::all_anticommute({n, 1, m});

  long long total = 0;
  std::vector<int> ids(s), block(s);
  std::vector<std::pair<int, int>> eps_pairs;
  partition::for_each_pair_partition(s, [&](const partition::PairPartition& sigma) {
    for (std::size_t j = 0; j < sigma.pairs.size(); ++j) {
      const auto& [e, z] = sigma.pairs[j];
      if (alphas[e] != alphas[z]) return true;  // sigma must refine sigma(alpha)
      block[e] = static_cast<int>(j);
      block[z] = static_cast<int>(j);
    }
    for (int l = 0; l < s; ++l) ids[l] = alphas[l] * m + block[l];
    eps_pairs.clear();
    spin::normal_order_trace(ids, sf, eps_pairs);
    std::map<std::pair<int, int>, int> cross_count;
    int within = 0;
    for (const auto& pr : eps_pairs) {
      if (pr.first / m == pr.second / m)
        ++within;
      else
        ++cross_count[pr];
    }
    for (const auto& [pr, cnt] : cross_count)
      if (cnt % 2 != 0) return true;  // E[eps^odd] = 0 for a fair sign
    total += (within % 2 != 0) ? -1 : 1;
    return true;
  });
  return total;
}

SuiteResult criterion_1(std::uint64_t seed) {
  SuiteResult suite{criterion_name(1)};
  const auto start = clock_type::now();
  long long words = 0, mismatches = 0;
  for (int n = 1; n <= 3; ++n) {
    for (int s = 0; s <= 8; ++s) {
      std::vector<int> alphas(s, 0);
      for (;;) {
        partition::WordSpec word;
        for (int a : alphas) word.letters.emplace_back(a, 0);
        const double a_val =
            partition::weighted_pair_moment(word, partition::WeightFunction::free_clifford(n));
        const long long b_val = z2_word_trace(alphas);
        const long long c_val = spin_pattern_trace(alphas, n);
        ++words;
        if (a_val != static_cast<double>(b_val) || b_val != c_val) ++mismatches;
        int pos = s - 1;
        while (pos >= 0 && ++alphas[pos] == n) alphas[pos--] = 0;
        if (pos < 0) break;
      }
    }
  }
  suite.absorb(make_record("c1.oracle_triangle",
                           json{{"n_max", 3}, {"length_max", 8}, {"words", words}},
                           static_cast<double>(mismatches), 0.0, 0.0, mismatches == 0,
                           seed, ms_since(start)));
  return suite;
}

// ---------------------------------------------------------------------------
// criterion 2: single-Clifford Wick check
// ---------------------------------------------------------------------------

SuiteResult criterion_2(std::uint64_t seed) {
  SuiteResult suite{criterion_name(2)};
  const auto start = clock_type::now();
  long long words = 0, mismatches = 0;
  for (int d = 1; d <= 3; ++d) {
    const spin::SignFunction sf = spin::SignFunction::all_anticommute({1, d, 1});
    for (int s = 0; s <= 6; ++s) {
      std::vector<int> letters(s, 0);
      for (;;) {
        partition::WordSpec word;
        for (int i : letters) word.letters.emplace_back(0, i);
        const double wick =
            partition::weighted_pair_moment(word, partition::WeightFunction::free_clifford(1));
        const spin::NormalForm nf = spin::normal_order(letters, sf);
        const long long spin_trace = nf.word == 0 ? nf.sign : 0;
        ++words;
        if (wick != static_cast<double>(spin_trace)) ++mismatches;
        int pos = s - 1;
        while (pos >= 0 && ++letters[pos] == d) letters[pos--] = 0;
        if (pos < 0) break;
      }
    }
  }
  suite.absorb(make_record("c2.wick",
                           json{{"d_max", 3}, {"length_max", 6}, {"words", words}},
                           static_cast<double>(mismatches), 0.0, 0.0, mismatches == 0,
                           seed, ms_since(start)));
  return suite;
}

// ---------------------------------------------------------------------------
// criterion 3: CLT convergence
// ---------------------------------------------------------------------------

SuiteResult criterion_3(std::uint64_t seed) {
  SuiteResult suite{criterion_name(3)};
  struct Case {
    const char* label;
    int n, d;
    partition::WordSpec word;
  };
  const std::vector<Case> cases = {
      {"z1z2z2z1", 2, 1, {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}}},
      {"z1z2z1z2", 2, 1, {{{0, 0}, {1, 0}, {0, 0}, {1, 0}}}},
      {"x1x2x1x2", 1, 2, {{{0, 0}, {0, 1}, {0, 0}, {0, 1}}}},
  };
  const std::vector<int> m_list{2, 4, 8};
  for (const auto& c : cases) {
    const auto start = clock_type::now();
    const clt::SignModel model = clt::SignModel::theorem_b(c.n, c.d, 2, seed);
    const auto reports = clt::mc_moment_study(c.word, model, m_list, 4000);
    const clt::TrialReport& first = reports.front();
    const clt::TrialReport& last = reports.back();
    const double slack = 1e-12;  // exact-case roundoff when stderr is 0
    const bool band = last.abs_error() <= 3.0 * last.std_error + slack;
    const bool shrink = last.abs_error() <= first.abs_error() + slack;
    suite.absorb(make_record(
        std::string("c3.band.") + c.label,
        json{{"m", last.m}, {"trials", last.trials}, {"target", last.target},
             {"stderr", last.std_error}},
        last.abs_error(), 3.0 * last.std_error, slack, band, seed, ms_since(start)));
    suite.absorb(make_record(
        std::string("c3.shrink.") + c.label,
        json{{"abs_error_m2", first.abs_error()}, {"abs_error_m8", last.abs_error()}},
        last.abs_error(), first.abs_error(), slack, shrink, seed, 0.0));
  }
  return suite;
}

// ---------------------------------------------------------------------------
// criterion 4: key-lemma statistics
// ---------------------------------------------------------------------------

SuiteResult criterion_4(std::uint64_t seed) {
  SuiteResult suite{criterion_name(4)};
  struct Case {
    const char* label;
    int n;
    partition::WordSpec word;
  };
  const std::vector<Case> cases = {
      {"z1z2", 2, {{{0, 0}, {1, 0}}}},
      {"z1z2z3", 3, {{{0, 0}, {1, 0}, {2, 0}}}},
  };
  for (const auto& c : cases)
    for (int m : {4, 8}) {
      const auto start = clock_type::now();
      const clt::SignModel model = clt::SignModel::theorem_b(c.n, 1, m, seed);
      const clt::KeyLemmaReport rep = clt::key_lemma_study(c.word, model, m, 500);
      const double slack = 1e-9;
      suite.absorb(make_record(
          std::string("c4.orthogonal.") + c.label,
          json{{"m", m}, {"trials", rep.trials}}, rep.max_abs_inner, 0.0, 0.0,
          rep.max_abs_inner == 0.0, seed, ms_since(start)));
      suite.absorb(make_record(
          std::string("c4.norm1.") + c.label,
          json{{"m", m}, {"exact", rep.exact_norm1_sq}, {"stderr", rep.stderr_norm1_sq}},
          std::abs(rep.mean_norm1_sq - rep.exact_norm1_sq),
          3.0 * rep.stderr_norm1_sq, slack,
          std::abs(rep.mean_norm1_sq - rep.exact_norm1_sq) <=
              3.0 * rep.stderr_norm1_sq + slack,
          seed, 0.0));
      suite.absorb(make_record(
          std::string("c4.mass.") + c.label, json{{"m", m}},
          std::abs(rep.mean_norm1_sq + rep.mean_norm2_sq - 1.0), slack, slack,
          std::abs(rep.mean_norm1_sq + rep.mean_norm2_sq - 1.0) <= slack, seed, 0.0));
    }
  return suite;
}

// ---------------------------------------------------------------------------
// criterion 5: Carlen-Lieb / Biane optimal-time hypercontractivity
// ---------------------------------------------------------------------------

SuiteResult criterion_5(std::uint64_t seed) {
  SuiteResult suite{criterion_name(5)};
  const std::vector<std::pair<double, double>> pq = {{1.5, 2.0}, {2.0, 4.0}, {1.2, 3.0}};
  const double tol = 1e-9;
  const int count = 500;

  struct Family {
    const char* label;
    std::function<spin::SignFunction(int index)> sf_for;
  };
  const std::vector<Family> families = {
      {"clifford",
       [](int index) {
         const int d = 1 + index % 3;
         return spin::SignFunction::all_anticommute({1, d, 1});
       }},
      {"mixed_spin",
       [seed](int index) {
         const int m = 1 + index % 3;
         const clt::SignModel model = clt::SignModel::theorem_b(2, 1, m, seed ^ 0xb1a2);
         return clt::sample_sign_function(model, static_cast<std::uint64_t>(index));
       }},
  };

  for (const auto& fam : families) {
    const auto start = clock_type::now();
    std::vector<double> worst(count, -1.0e300);
    report::parallel_for(count, [&](int i) {
      const spin::SignFunction sf = fam.sf_for(i);
      const spin::SpinElement f = hyperbench::random_spin_element(
          sf, sf.dims().total(), seed + 977u * static_cast<unsigned>(i), true);
      double w = -1.0e300;
      for (const auto& [p, q] : pq) {
        const double t = hyperbench::optimal_time(p, q);
        const hyperbench::Margin m = hyperbench::hc_margin_spin(f, sf, p, q, t, tol);
        w = std::max(w, m.margin());
      }
      worst[i] = w;
    });
    const double worst_all = *std::max_element(worst.begin(), worst.end());
    suite.absorb(make_record(std::string("c5.optimal_time.") + fam.label,
                             json{{"elements", count}, {"pq", {"1.5:2", "2:4", "1.2:3"}}},
                             worst_all, 0.0, tol, worst_all <= tol, seed,
                             ms_since(start)));
  }
  return suite;
}

// ---------------------------------------------------------------------------
// criterion 6: sharpness below optimal time
// ---------------------------------------------------------------------------

SuiteResult criterion_6(std::uint64_t seed) {
  SuiteResult suite{criterion_name(6)};
  std::vector<double> grid;
  for (int k = 1; k <= 10; ++k) grid.push_back(0.05 * k);
  for (const auto& [p, q] : std::vector<std::pair<double, double>>{{2, 4}, {1.5, 3}}) {
    const auto start = clock_type::now();
    const auto below = hyperbench::sharpness_probe(p, q, 0.9, grid);
    const auto at = hyperbench::sharpness_probe(p, q, 1.0, grid);
    suite.absorb(make_record("c6.violation_below",
                             json{{"p", p}, {"q", q}, {"t_factor", 0.9},
                                  {"delta", below.delta}},
                             below.margin, 1e-6, 0.0,
                             below.found && below.margin > 1e-6, seed,
                             ms_since(start)));
    suite.absorb(make_record("c6.none_at_optimal",
                             json{{"p", p}, {"q", q}, {"t_factor", 1.0}},
                             at.found ? at.margin : 0.0, 0.0, 0.0, !at.found, seed,
                             0.0));
  }
  return suite;
}

// ---------------------------------------------------------------------------
// criterion 7: two-point inequality boundary
// ---------------------------------------------------------------------------

SuiteResult criterion_7(std::uint64_t seed) {
  SuiteResult suite{criterion_name(7)};
  const auto start = clock_type::now();
  const double p = 2.0, q = 4.0;
  const double r = std::sqrt((p - 1.0) / (q - 1.0));
  const double at_boundary = hyperbench::two_point_scan(p, q, r);
  const double beyond = hyperbench::two_point_scan(p, q, r + 0.02);
  suite.absorb(make_record("c7.boundary", json{{"p", p}, {"q", q}, {"r", r}},
                           at_boundary, 0.0, 1e-10, at_boundary <= 1e-10, seed,
                           ms_since(start)));
  suite.absorb(make_record("c7.beyond", json{{"p", p}, {"q", q}, {"r", r + 0.02}},
                           beyond, 0.0, 0.0, beyond > 0.0, seed, 0.0));
  return suite;
}

// ---------------------------------------------------------------------------
// criterion 8: identity suite
// ---------------------------------------------------------------------------

bool exactly_equal(const group::GroupAlgebraElement& a,
                   const group::GroupAlgebraElement& b) {
  group::GroupAlgebraElement diff = a;
  diff -= b;
  return diff.terms().empty();
}

group::GroupAlgebraElement brute_power(const group::GroupAlgebraElement& base, int m) {
  group::GroupAlgebraElement acc = group::GroupAlgebraElement::unit(base.flavor());
  for (int i = 0; i < m; ++i) acc = reduce_multiply(acc, base);
  return acc;
}

SuiteResult criterion_8(std::uint64_t seed) {
  SuiteResult suite{criterion_name(8)};
  const auto start = clock_type::now();

  const group::GroupAlgebraElement zeta = group::v_basis(1, 1);  // u + u*
  const group::GroupAlgebraElement psi =
      group::lambda_map(1, 1);  // z1 + z2 = Lambda(zeta)

  int expand_fail = 0;
  for (int m = 0; m <= 8; ++m) {
    if (!exactly_equal(group::sym_expand(1, m, group::Side::Z), brute_power(zeta, m)))
      ++expand_fail;
    if (!exactly_equal(group::sym_expand(1, m, group::Side::Z2), brute_power(psi, m)))
      ++expand_fail;
  }
  suite.absorb(make_record("c8.trig_expansion", json{{"m_max", 8}},
                           expand_fail, 0.0, 0.0, expand_fail == 0, seed,
                           ms_since(start)));

  // Chebyshev-style recurrences: v_1 v_{k-1} = v_k + c_k v_{k-2} with c_2 = 2
  // (the k = 2 step hits the constant v_0 twice), c_k = 1 otherwise; the same
  // recurrence must hold for the Lambda images a_k + b_k.
  int rec_fail = 0;
  for (int k = 2; k <= 8; ++k) {
    const group::cplx c_k = k == 2 ? 2.0 : 1.0;
    const auto v_rec = reduce_multiply(zeta, group::v_basis(1, k - 1)) -
                       c_k * group::v_basis(1, k - 2);
    if (!exactly_equal(v_rec, group::v_basis(1, k))) ++rec_fail;
    const auto l_rec = reduce_multiply(psi, group::lambda_map(1, k - 1)) -
                       c_k * group::lambda_map(1, k - 2);
    if (!exactly_equal(l_rec, group::lambda_map(1, k))) ++rec_fail;
  }
  suite.absorb(make_record("c8.lambda_ladder", json{{"k_max", 8}}, rec_fail, 0.0, 0.0,
                           rec_fail == 0, seed, 0.0));

  // pi is trace-preserving on all F2 words of length <= 5
  int pi_fail = 0, pi_words = 0;
  std::vector<group::GroupWord> frontier{group::GroupWord::identity(group::Flavor::Free)};
  for (int len = 0; len <= 5; ++len) {
    std::vector<group::GroupWord> next;
    for (const auto& w : frontier) {
      ++pi_words;
      const auto mat = group::pi_rep(group::GroupAlgebraElement::basis(w));
      const group::cplx tr = mat.normalized_trace();
      const group::cplx expect = w.is_identity() ? 1.0 : 0.0;
      if (tr != expect) ++pi_fail;
      for (int j : {1, -1, 2, -2}) {
        group::GroupWord ext = w * group::GroupWord::generator(group::Flavor::Free, j);
        if (ext.length() == len + 1) next.push_back(std::move(ext));
      }
    }
    frontier = std::move(next);
  }
  suite.absorb(make_record("c8.pi_trace", json{{"length_max", 5}, {"words", pi_words}},
                           pi_fail, 0.0, 0.0, pi_fail == 0, seed, 0.0));

  // Phi intertwines the semigroups with the t/2 speed change, exactly
  int phi_fail = 0;
  for (double t : {0.3, 1.0, 2.5}) {
    const auto f = hyperbench::random_group_element(group::Flavor::Free, 2, 3,
                                                    seed ^ 0xf1f1, false);
    const auto lhs = group::phi_embed(group::poisson_semigroup(f, t));
    const auto rhs = group::poisson_semigroup(group::phi_embed(f), t / 2.0);
    if (!exactly_equal(lhs, rhs)) ++phi_fail;
  }
  suite.absorb(make_record("c8.phi_intertwine", json{{"t", {0.3, 1.0, 2.5}}}, phi_fail,
                           0.0, 0.0, phi_fail == 0, seed, 0.0));
  return suite;
}

// ---------------------------------------------------------------------------
// criterion 9: arcsine moments and norms
// ---------------------------------------------------------------------------

SuiteResult criterion_9(std::uint64_t seed) {
  SuiteResult suite{criterion_name(9)};
  const auto start = clock_type::now();
  const group::GroupAlgebraElement zeta = group::v_basis(1, 1);

  // central binomials C(2k, k)
  int moment_fail = 0;
  group::GroupAlgebraElement pow = group::GroupAlgebraElement::unit(group::Flavor::Free);
  const group::GroupAlgebraElement sq = reduce_multiply(zeta, zeta);
  double binom = 1.0;
  for (int k = 0; k <= 6; ++k) {
    if (pow.trace() != group::cplx{binom}) ++moment_fail;
    pow = reduce_multiply(pow, sq);
    binom = binom * (2.0 * k + 1.0) * (2.0 * k + 2.0) / ((k + 1.0) * (k + 1.0));
  }
  suite.absorb(make_record("c9.central_binomial", json{{"k_max", 6}}, moment_fail, 0.0,
                           0.0, moment_fail == 0, seed, ms_since(start)));

  const group::GroupLpResult n4 = group::group_lp_norm(zeta, 4.0, 6);
  const double target = std::pow(6.0, 0.25);
  suite.absorb(make_record("c9.norm4", json{{"p", 4.0}, {"achieved_K", n4.achieved_K}},
                           std::abs(n4.value - target), 0.0, 1e-8,
                           std::abs(n4.value - target) <= 1e-8, seed, 0.0));

  const group::GroupAlgebraElement psi = group::lambda_map(1, 1);
  for (double p : {1.5, 3.0}) {
    const double a = group::group_lp_norm(zeta, p, 8).value;
    const double b = group::group_lp_norm(psi, p, 8).value;
    suite.absorb(make_record("c9.same_distribution", json{{"p", p}}, std::abs(a - b),
                             0.0, 1e-8, std::abs(a - b) <= 1e-8, seed, 0.0));
  }
  return suite;
}

// ---------------------------------------------------------------------------
// criterion 10: BCL convexity + Khintchine identity
// ---------------------------------------------------------------------------

SuiteResult criterion_10(std::uint64_t seed) {
  SuiteResult suite{criterion_name(10)};
  auto start = clock_type::now();

  std::uint64_t ctr = seed ^ 0xbc1bc1;
  const auto gauss_matrix = [&ctr](int size) {
    Eigen::MatrixXcd M(size, size);
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) {
        // two uniform hashes -> one complex gaussian (Box-Muller)
        const auto u = [&ctr] {
          ctr += 0x9e3779b97f4a7c15ull;
          std::uint64_t x = ctr;
          x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
          x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
          x ^= x >> 31;
          return static_cast<double>(x >> 11) * 0x1.0p-53;
        };
        const double u1 = std::max(u(), 1e-300), u2 = u();
        const double r = std::sqrt(-std::log(u1));
        M(i, j) = std::complex<double>(r * std::cos(2 * std::numbers::pi * u2),
                                       r * std::sin(2 * std::numbers::pi * u2));
      }
    return M;
  };

  double worst_bcl = -1.0e300;
  for (int trial = 0; trial < 1000; ++trial) {
    const int size = 2 + trial % 7;
    const Eigen::MatrixXcd A = gauss_matrix(size);
    const Eigen::MatrixXcd B = gauss_matrix(size);
    for (double p : {1.1, 1.5, 2.0})
      worst_bcl = std::max(worst_bcl, hyperbench::bcl_check(A, B, p).margin());
  }
  suite.absorb(make_record("c10.bcl", json{{"pairs", 1000}, {"size_max", 8}},
                           worst_bcl, 0.0, 1e-10, worst_bcl <= 1e-10, seed,
                           ms_since(start)));

  start = clock_type::now();
  double worst_kh = 0.0;
  for (int d = 1; d <= 8; ++d)
    for (int rep = 0; rep < 5; ++rep) {
      std::vector<double> coeffs(d);
      for (double& c : coeffs) {
        ctr += 0x9e3779b97f4a7c15ull;
        std::uint64_t x = ctr;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        c = static_cast<double>((x ^ (x >> 31)) >> 11) * 0x1.0p-53 * 4.0 - 2.0;
      }
      for (double p : {1.3, 2.0, 3.7})
        worst_kh = std::max(worst_kh, hyperbench::khintchine_check(coeffs, p));
    }
  suite.absorb(make_record("c10.khintchine", json{{"d_max", 8}, {"vectors", 40}},
                           worst_kh, 0.0, 1e-10, worst_kh <= 1e-10, seed,
                           ms_since(start)));
  return suite;
}

// ---------------------------------------------------------------------------
// criterion 11: doubled time on the free group + improvement time
// ---------------------------------------------------------------------------

SuiteResult criterion_11(std::uint64_t seed) {
  SuiteResult suite{criterion_name(11)};
  const auto start = clock_type::now();
  const int samples = 100;
  const int quad_K = 8;
  const std::size_t budget = 1'500'000;

  std::vector<double> sample_doubled(samples), sample_improve(samples);
  std::vector<int> sample_conclusive(samples);
  report::parallel_for(samples, [&](int i) {
    const auto f = hyperbench::random_group_element(
        group::Flavor::Free, 2, 2, seed + 31u * static_cast<unsigned>(i), false);

    // shared quadrature moments of f*f for every rhs norm
    const std::vector<double> moments = group::group_moments(f, 2 * quad_K, budget);
    const int K_eff = std::min<int>(quad_K, static_cast<int>(moments.size() - 1) / 2);
    std::vector<double> trimmed(moments.begin(), moments.begin() + 2 * K_eff + 1);

    double worst_doubled = -1.0e300, worst_improve = -1.0e300;
    int conclusive = 0;
    for (double q : {2.0, 3.0}) {
      const double p = 1.5;
      const double t = hyperbench::doubled_time(p, q);
      const double rhs = gns::lp_norm_moments(trimmed, p, K_eff).value;
      double lhs;
      if (q == 2.0) {
        double acc = 0.0;
        for (const auto& [w, c] : f.terms())
          acc += std::norm(c) * std::exp(-2.0 * t * w.length());
        lhs = std::sqrt(acc);
      } else {
        lhs = group::group_lp_norm(group::poisson_semigroup(f, t), q, quad_K, budget)
                  .value;
      }
      worst_doubled = std::max(worst_doubled, lhs - rhs);
    }

    for (double p : {1.3, 1.7}) {
      const double t = hyperbench::improvement_time(p);
      double acc = 0.0;
      for (const auto& [w, c] : f.terms())
        acc += std::norm(c) * std::exp(-2.0 * t * w.length());
      const gns::QuadratureResult rhs = gns::lp_norm_moments(trimmed, p, K_eff);
      if (rhs.stabilization <= 1e-8) ++conclusive;
      worst_improve = std::max(worst_improve, std::sqrt(acc) - rhs.value);
    }
    sample_doubled[i] = worst_doubled;
    sample_improve[i] = worst_improve;
    sample_conclusive[i] = conclusive;
  });

  double worst_doubled = -1.0e300, worst_improve = -1.0e300;
  int conclusive = 0;
  const int improve_checks = 2 * samples;
  for (int i = 0; i < samples; ++i) {
    worst_doubled = std::max(worst_doubled, sample_doubled[i]);
    worst_improve = std::max(worst_improve, sample_improve[i]);
    conclusive += sample_conclusive[i];
  }
  suite.absorb(make_record("c11.doubled_time",
                           json{{"samples", samples}, {"p", 1.5}, {"q", {2.0, 3.0}}},
                           worst_doubled, 0.0, 1e-6, worst_doubled <= 1e-6, seed,
                           ms_since(start)));
  suite.absorb(make_record("c11.improvement_margin",
                           json{{"samples", samples}, {"p", {1.3, 1.7}}},
                           worst_improve, 0.0, 1e-6, worst_improve <= 1e-6, seed, 0.0));
  const double frac =
      improve_checks ? static_cast<double>(conclusive) / improve_checks : 0.0;
  suite.absorb(make_record("c11.conclusive_fraction",
                           json{{"stabilization_gate", 1e-8}, {"checks", improve_checks}},
                           frac, 0.95, 0.0, frac >= 0.95, seed, 0.0));
  return suite;
}

// ---------------------------------------------------------------------------
// criterion 12: W1 theorem + character-twist invariance
// ---------------------------------------------------------------------------

SuiteResult criterion_12(std::uint64_t seed) {
  SuiteResult suite{criterion_name(12)};
  const auto start = clock_type::now();
  const int samples = 200;
  double worst_margin = -1.0e300, worst_twist = 0.0;

  std::uint64_t ctr = seed ^ 0x717171;
  const auto gauss = [&ctr] {
    const auto u = [&ctr] {
      ctr += 0x9e3779b97f4a7c15ull;
      std::uint64_t x = ctr;
      x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
      x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
      x ^= x >> 31;
      return static_cast<double>(x >> 11) * 0x1.0p-53;
    };
    const double u1 = std::max(u(), 1e-300), u2 = u();
    const double r = std::sqrt(-std::log(u1));
    return group::cplx(r * std::cos(2 * std::numbers::pi * u2),
                       r * std::sin(2 * std::numbers::pi * u2));
  };

  for (int i = 0; i < samples; ++i) {
    const int n = 1 + i % 3;
    const group::cplx a0 = gauss();
    std::vector<group::cplx> a(n), b(n);
    for (auto& c : a) c = gauss();
    for (auto& c : b) c = gauss();

    for (double p : {1.5, 1.8}) {
      const hyperbench::Margin m = hyperbench::w1_check(a0, a, b, p, 3);
      worst_margin = std::max(worst_margin, m.margin());

      // twist each generator coefficient pair by a character phase
      std::vector<group::cplx> at(n), bt(n);
      for (int j = 0; j < n; ++j) {
        const double theta = 2 * std::numbers::pi *
                             static_cast<double>((j + 1) * (i + 1) % 97) / 97.0;
        const group::cplx phase{std::cos(theta), std::sin(theta)};
        at[j] = a[j] * phase;
        bt[j] = b[j] * std::conj(phase);
      }
      const hyperbench::Margin mt = hyperbench::w1_check(a0, at, bt, p, 3);
      worst_twist = std::max(worst_twist, std::abs(m.rhs - mt.rhs));
    }
  }
  suite.absorb(make_record("c12.w1_margin",
                           json{{"samples", samples}, {"p", {1.5, 1.8}}, {"n_max", 3}},
                           worst_margin, 0.0, 1e-6, worst_margin <= 1e-6, seed,
                           ms_since(start)));
  suite.absorb(make_record("c12.twist_invariance", json{{"samples", samples}},
                           worst_twist, 0.0, 1e-10, worst_twist <= 1e-10, seed, 0.0));
  return suite;
}

// ---------------------------------------------------------------------------
// criterion 13: beta constant
// ---------------------------------------------------------------------------

SuiteResult criterion_13(std::uint64_t seed) {
  SuiteResult suite{criterion_name(13)};
  const auto start = clock_type::now();
  const double worst = hyperbench::beta_scan(hyperbench::beta_default_grid());
  suite.absorb(make_record("c13.beta_scan", json{{"points", 10000}}, worst, 0.0, 1e-12,
                           worst <= 1e-12, seed, ms_since(start)));
  return suite;
}

}  // namespace

int criterion_count() { return 13; }

std::string criterion_name(int index) {
  static const char* names[] = {
      "moment-triangle", "wick",       "clt",       "key-lemma", "optimal-time",
      "sharpness",       "two-point",  "identities", "arcsine",  "bcl-khintchine",
      "free-group-time", "w1",         "beta",
  };
  if (index < 1 || index > 13) throw std::invalid_argument("criterion index out of range");
  return names[index - 1];
}

SuiteResult run_criterion(int index, std::uint64_t seed) {
  switch (index) {
    case 1: return criterion_1(seed);
    case 2: return criterion_2(seed);
    case 3: return criterion_3(seed);
    case 4: return criterion_4(seed);
    case 5: return criterion_5(seed);
    case 6: return criterion_6(seed);
    case 7: return criterion_7(seed);
    case 8: return criterion_8(seed);
    case 9: return criterion_9(seed);
    case 10: return criterion_10(seed);
    case 11: return criterion_11(seed);
    case 12: return criterion_12(seed);
    case 13: return criterion_13(seed);
  }
  throw std::invalid_argument("criterion index out of range");
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (int i = 1; i <= criterion_count(); ++i) names.push_back(criterion_name(i));
  names.push_back("all");
  return names;
}

SuiteResult run_named(const std::string& name, std::uint64_t seed) {
  if (name == "all") {
    SuiteResult all{"all"};
    for (int i = 1; i <= criterion_count(); ++i) {
      SuiteResult one = run_criterion(i, seed);
      all.pass = all.pass && one.pass;
      for (auto& r : one.records) all.records.push_back(std::move(r));
    }
    return all;
  }
  for (int i = 1; i <= criterion_count(); ++i)
    if (criterion_name(i) == name) return run_criterion(i, seed);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace freehyper::suites
