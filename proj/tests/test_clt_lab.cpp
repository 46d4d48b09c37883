#include <doctest.h>

#include <cmath>
#include <vector>

#include "freehyper/clt_lab.hpp"

using namespace freehyper;
using clt::SignModel;

namespace {

partition::WordSpec cross_word() {  // z1 z2 z1 z2
  return partition::WordSpec{{{0, 0}, {1, 0}, {0, 0}, {1, 0}}};
}

partition::WordSpec nested_word() {  // z1 z2 z2 z1
  return partition::WordSpec{{{0, 0}, {1, 0}, {1, 0}, {0, 0}}};
}

}  // namespace

TEST_CASE("sampled sign functions are deterministic in (seed, trial)") {
  const SignModel model = SignModel::theorem_b(2, 1, 3, 99);
  const spin::SignFunction a = clt::sample_sign_function(model, 7);
  const spin::SignFunction b = clt::sample_sign_function(model, 7);
  const spin::SignFunction c = clt::sample_sign_function(model, 8);
  const int N = a.dims().total();
  bool identical = true, all_same_as_c = true;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      identical = identical && a.eps(i, j) == b.eps(i, j);
      all_same_as_c = all_same_as_c && a.eps(i, j) == c.eps(i, j);
    }
  CHECK(identical);
  CHECK_FALSE(all_same_as_c);  // fresh trial, fresh cross-block coins
}

TEST_CASE("within-block pairs anticommute deterministically") {
  const SignModel model = SignModel::theorem_b(2, 2, 2, 3);
  const spin::SignFunction sf = clt::sample_sign_function(model, 0);
  const spin::Dims dims = sf.dims();
  for (int a = 0; a < dims.total(); ++a)
    for (int b = 0; b < dims.total(); ++b) {
      const spin::GenIndex ga = sf.unflatten(a), gb = sf.unflatten(b);
      if (ga.alpha == gb.alpha) CHECK(sf.eps(a, b) == -1);
    }
}

TEST_CASE("deterministic words have zero variance at every m") {
  const SignModel model = SignModel::theorem_b(2, 1, 2, 17);
  const auto reports = clt::mc_moment_study(nested_word(), model, {2, 4}, 50);
  for (const auto& r : reports) {
    CHECK(r.target == 1.0);
    CHECK(r.mean == 1.0);
    CHECK(r.std_error == 0.0);
  }
}

TEST_CASE("crossing word mean matches the exact enumeration at tiny size") {
  const SignModel model = SignModel::theorem_b(2, 1, 2, 5);
  // n*d*m = 4: exact enumeration is feasible. The cross-block signs are fair
  // coins, so E[tau] = m^{-2} sum_{k1,k2} E[eps] with E[eps] = 0 off the
  // diagonal tuple contributions; the exact value is computable.
  const double exact = clt::exact_moment_enumeration(cross_word(), model, 2);
  const auto reports = clt::mc_moment_study(cross_word(), model, {2}, 20000);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].target == 0.0);
  CHECK(std::abs(reports[0].mean - exact) <= 4.0 * reports[0].std_error + 1e-12);
}

TEST_CASE("exact enumeration reproduces deterministic traces") {
  const SignModel model = SignModel::theorem_b(2, 1, 2, 1);
  CHECK(clt::exact_moment_enumeration(nested_word(), model, 2) ==
        doctest::Approx(1.0).epsilon(1e-14));
  // Fair cross coins make the crossing word average to zero exactly.
  CHECK(clt::exact_moment_enumeration(cross_word(), model, 2) ==
        doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("variance of the crossing word decays like 1/m^2") {
  const SignModel model = SignModel::theorem_b(2, 1, 2, 23);
  const int trials = 4000;
  const auto reports = clt::mc_moment_study(cross_word(), model, {4, 8}, trials);
  REQUIRE(reports.size() == 2);
  // stderr ~ 1/(m sqrt(trials)): the m=8 run should have about half the
  // standard error of the m=4 run.
  CHECK(reports[1].std_error < 0.75 * reports[0].std_error);
  CHECK(reports[1].std_error > 0.0);
}

TEST_CASE("key lemma: orthogonality is exact and the mass matches") {
  const SignModel model = SignModel::theorem_b(2, 1, 4, 11);
  const partition::WordSpec word{{{0, 0}, {1, 0}}};  // z1 z2
  const clt::KeyLemmaReport rep = clt::key_lemma_study(word, model, 4, 100);
  CHECK(rep.max_abs_inner == 0.0);
  // s = 2, m = 4: exact mass m(m-1)/m^2 = 3/4, deterministic for this word.
  CHECK(rep.exact_norm1_sq == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(std::abs(rep.mean_norm1_sq - rep.exact_norm1_sq) < 1e-12);
  CHECK(std::abs(rep.mean_norm1_sq + rep.mean_norm2_sq - 1.0) < 1e-12);
}

TEST_CASE("trial reports serialize to the documented CSV layout") {
  std::vector<clt::TrialReport> reports{{2, 10, 0.5, 0.25, 0.0}};
  const std::string csv = clt::trial_reports_csv(reports);
  CHECK(csv.find("m,trials,mean,stderr,target,abs_error") != std::string::npos);
  CHECK(csv.find("2,10,0.5,0.25,0,0.5") != std::string::npos);
}

TEST_CASE("norm convergence study tracks the group norm") {
  group::GroupAlgebraElement a(group::Flavor::FreeZ2);
  a.add_term(group::GroupWord(group::Flavor::FreeZ2, {1}), 1.0);
  a.add_term(group::GroupWord(group::Flavor::FreeZ2, {2}), 1.0);
  const auto reports = clt::norm_convergence_study(a, 2.0, {2, 4}, 3, 77);
  REQUIRE(reports.size() == 2);
  // ||z1 + z2||_2 = sqrt(2) exactly, and the lift preserves the 2-norm.
  for (const auto& r : reports) {
    CHECK(r.target == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    CHECK(std::abs(r.mean - r.target) < 1e-9);
  }
}
