#include <doctest.h>

#include <cmath>
#include <random>

#include "freehyper/gns_rep.hpp"

using namespace freehyper;
using spin::Dims;
using spin::SignFunction;
using spin::SpinElement;
using spin::WordMask;

TEST_CASE("left regular matrix of a single generator is the swap") {
  const Dims dims{1, 1, 1};
  const SignFunction sf = SignFunction::all_anticommute(dims);
  const SpinElement x = SpinElement::word(dims, WordMask{1});
  const Eigen::MatrixXcd L = gns::left_regular_matrix(x, sf);
  REQUIRE(L.rows() == 2);
  CHECK(L(0, 0) == spin::cplx{0.0, 0.0});
  CHECK(L(1, 0) == spin::cplx{1.0, 0.0});
  CHECK(L(0, 1) == spin::cplx{1.0, 0.0});
  CHECK(L(1, 1) == spin::cplx{0.0, 0.0});
}

TEST_CASE("spectral Lp norms of 1 + x1 follow the two-point formula") {
  const Dims dims{1, 1, 1};
  const SignFunction sf = SignFunction::all_anticommute(dims);
  SpinElement f = SpinElement::unit(dims);
  f += SpinElement::word(dims, WordMask{1});
  // Eigenvalues are 0 and 2 with weight 1/2 each: ||f||_p = 2^{1-1/p}.
  for (double p : {1.0, 1.5, 2.0, 4.0})
    CHECK(gns::lp_norm_spectral(f, sf, p) ==
          doctest::Approx(std::pow(2.0, 1.0 - 1.0 / p)).epsilon(1e-12));
  CHECK(gns::lp_norm_spectral(f, sf, std::numeric_limits<double>::infinity()) ==
        doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("x1 + x2 has constant Lp norm sqrt(2)") {
  const Dims dims{1, 2, 1};
  const SignFunction sf = SignFunction::all_anticommute(dims);
  SpinElement f(dims);
  f.add_term(WordMask{1}, 1.0);
  f.add_term(WordMask{2}, 1.0);
  // (x1+x2)^2 = 2, so |f| = sqrt(2) and every Lp norm agrees.
  for (double p : {1.0, 1.7, 3.0})
    CHECK(gns::lp_norm_spectral(f, sf, p) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("Hoelder monotonicity of spectral norms") {
  const Dims dims{1, 3, 1};
  const SignFunction sf = SignFunction::all_anticommute(dims);
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  SpinElement f(dims);
  for (WordMask mask = 0; mask < 8; ++mask) f.add_term(mask, {coeff(rng), coeff(rng)});
  double prev = 0.0;
  for (double p : {1.0, 1.5, 2.0, 3.0, 6.0}) {
    const double cur = gns::lp_norm_spectral(f, sf, p);
    CHECK(cur >= prev - 1e-12);
    prev = cur;
  }
}

TEST_CASE("quadrature recovers a point mass") {
  // Moments of the Dirac measure at 3.
  const std::vector<double> moments{1.0, 3.0, 9.0, 27.0, 81.0};
  int achieved = 0;
  const gns::SpectralMeasure mu = gns::quadrature_from_moments(moments, 2, &achieved);
  CHECK(achieved == 1);
  REQUIRE(mu.atoms.size() == 1);
  CHECK(mu.atoms[0].first == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(mu.atoms[0].second == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("quadrature recovers a two-atom measure exactly") {
  // Measure (delta_1 + delta_4)/2: moments m_k = (1 + 4^k)/2.
  std::vector<double> moments;
  for (int k = 0; k <= 4; ++k) moments.push_back(0.5 * (1.0 + std::pow(4.0, k)));
  const gns::SpectralMeasure mu = gns::quadrature_from_moments(moments, 2);
  REQUIRE(mu.atoms.size() == 2);
  CHECK(mu.atoms[0].first == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(mu.atoms[1].first == doctest::Approx(4.0).epsilon(1e-10));
  CHECK(mu.atoms[0].second == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(mu.atoms[1].second == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("lp_norm_moments flags exact rank deficiency and K=1 rules") {
  // Spectrum {4} with weight 1: ||a||_p = 2 for every p.
  const std::vector<double> dirac{1.0, 4.0, 16.0, 64.0, 256.0};
  const gns::QuadratureResult r = gns::lp_norm_moments(dirac, 3.0, 2);
  CHECK(r.achieved_K == 1);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r.stabilization == 0.0);  // exact finite-atomic measure
  // A requested single node cannot report a stabilization difference.
  const gns::QuadratureResult one = gns::lp_norm_moments({1.0, 2.0, 5.0}, 2.0, 1);
  CHECK(one.achieved_K == 1);
  CHECK(std::isinf(one.stabilization));
}

TEST_CASE("moment route agrees with the spectral route") {
  const Dims dims{1, 2, 1};
  const SignFunction sf = SignFunction::all_anticommute(dims);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  SpinElement f(dims);
  for (WordMask mask = 0; mask < 4; ++mask) f.add_term(mask, {coeff(rng), coeff(rng)});
  const std::vector<double> moments = gns::spin_moments(f, sf, 8);
  CHECK(moments[0] == doctest::Approx(1.0));
  for (double p : {1.5, 2.0, 3.0}) {
    const gns::QuadratureResult q = gns::lp_norm_moments(moments, p, 4);
    CHECK(q.value ==
          doctest::Approx(gns::lp_norm_spectral(f, sf, p)).epsilon(1e-8));
  }
}

TEST_CASE("spin_moments match traces of powers for a homogeneous element") {
  const Dims dims{1, 3, 1};
  const SignFunction sf = SignFunction::all_anticommute(dims);
  SpinElement f(dims);
  f.add_term(WordMask{1}, 2.0);
  f.add_term(WordMask{2}, -1.0);
  f.add_term(WordMask{4}, 0.5);
  // f is self-adjoint with f^2 = (4 + 1 + 0.25) * 1.
  const double s2 = 5.25;
  const std::vector<double> moments = gns::spin_moments(f, sf, 3);
  CHECK(moments[1] == doctest::Approx(s2).epsilon(1e-13));
  CHECK(moments[2] == doctest::Approx(s2 * s2).epsilon(1e-13));
  CHECK(moments[3] == doctest::Approx(s2 * s2 * s2).epsilon(1e-12));
}

TEST_CASE("left_regular_matrix rejects oversized algebras") {
  const Dims dims{1, 13, 1};
  const SignFunction sf = SignFunction::all_anticommute(dims);
  CHECK_THROWS_AS(gns::left_regular_matrix(SpinElement::unit(dims), sf, 12),
                  std::invalid_argument);
}
