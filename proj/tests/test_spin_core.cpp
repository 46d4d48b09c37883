#include <doctest.h>

#include <random>
#include <vector>

#include "freehyper/spin_core.hpp"

using namespace freehyper::spin;

namespace {

SpinElement random_element(const SignFunction& sf, std::uint64_t seed, int terms) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  const int total = sf.dims().total();
  std::uniform_int_distribution<WordMask> mask(0, (WordMask{1} << total) - 1);
  SpinElement e(sf.dims());
  for (int i = 0; i < terms; ++i)
    e.add_term(mask(rng), {coeff(rng), coeff(rng)});
  return e;
}

}  // namespace

TEST_CASE("generators square to the unit and obey the sign table") {
  const Dims dims{2, 1, 2};
  const SignFunction sf = SignFunction::all_anticommute(dims);
  const int total = dims.total();
  for (int a = 0; a < total; ++a) {
    const SpinElement xa = SpinElement::word(dims, WordMask{1} << a);
    const SpinElement sq = multiply(xa, xa, sf);
    CHECK(sq.coeff(0) == cplx{1.0, 0.0});
    CHECK(sq.terms().size() == 1);
    for (int b = a + 1; b < total; ++b) {
      const SpinElement xb = SpinElement::word(dims, WordMask{1} << b);
      const SpinElement ab = multiply(xa, xb, sf);
      const SpinElement ba = multiply(xb, xa, sf);
      const WordMask pair = (WordMask{1} << a) | (WordMask{1} << b);
      CHECK(ab.coeff(pair) == static_cast<double>(sf.eps(a, b)) * ba.coeff(pair));
    }
  }
}

TEST_CASE("normal_order sorts ids with one sign per transposition") {
  const Dims dims{1, 3, 1};
  const SignFunction sf = SignFunction::all_anticommute(dims);
  // x2 x1 x0 needs three transpositions: sign (-1)^3.
  const std::vector<int> ids{2, 1, 0};
  const NormalForm nf = normal_order(ids, sf);
  CHECK(nf.sign == -1);
  CHECK(nf.word == WordMask{0b111});
  // x0 x1 x0 collapses the repeated generator across one anticommutation.
  const std::vector<int> rep{0, 1, 0};
  const NormalForm nf2 = normal_order(rep, sf);
  CHECK(nf2.sign == -1);
  CHECK(nf2.word == WordMask{0b010});
}

TEST_CASE("normal_order_trace reports exactly the transposed pairs") {
  const Dims dims{1, 4, 1};
  const SignFunction sf = SignFunction::all_anticommute(dims);
  const std::vector<int> ids{3, 0, 2, 1};
  std::vector<std::pair<int, int>> pairs;
  const NormalForm nf = normal_order_trace(ids, sf, pairs);
  int sign = 1;
  for (const auto& [a, b] : pairs) sign *= sf.eps(a, b);
  CHECK(sign == nf.sign);
  const NormalForm direct = normal_order(ids, sf);
  CHECK(nf.sign == direct.sign);
  CHECK(nf.word == direct.word);
}

TEST_CASE("multiplication is associative on random elements") {
  const Dims dims{2, 1, 2};
  const SignFunction sf = SignFunction::all_anticommute(dims);
  const SpinElement a = random_element(sf, 11, 6);
  const SpinElement b = random_element(sf, 22, 6);
  const SpinElement c = random_element(sf, 33, 6);
  const SpinElement left = multiply(multiply(a, b, sf), c, sf);
  const SpinElement right = multiply(a, multiply(b, c, sf), sf);
  for (const auto& [mask, coeff] : left.terms())
    CHECK(std::abs(coeff - right.coeff(mask)) < 1e-12);
  CHECK(left.terms().size() == right.terms().size());
}

TEST_CASE("adjoint is an involutive antihomomorphism") {
  const Dims dims{1, 4, 1};
  const SignFunction sf = SignFunction::all_anticommute(dims);
  const SpinElement a = random_element(sf, 5, 8);
  const SpinElement b = random_element(sf, 6, 8);
  const SpinElement twice = adjoint(adjoint(a, sf), sf);
  for (const auto& [mask, coeff] : a.terms())
    CHECK(std::abs(coeff - twice.coeff(mask)) < 1e-12);
  const SpinElement lhs = adjoint(multiply(a, b, sf), sf);
  const SpinElement rhs = multiply(adjoint(b, sf), adjoint(a, sf), sf);
  for (const auto& [mask, coeff] : lhs.terms())
    CHECK(std::abs(coeff - rhs.coeff(mask)) < 1e-12);
}

TEST_CASE("trace is the empty-word coefficient and is tracial") {
  const Dims dims{1, 3, 1};
  const SignFunction sf = SignFunction::all_anticommute(dims);
  const SpinElement a = random_element(sf, 7, 5);
  const SpinElement b = random_element(sf, 8, 5);
  CHECK(trace(SpinElement::unit(dims)) == cplx{1.0, 0.0});
  const cplx ab = trace(multiply(a, b, sf));
  const cplx ba = trace(multiply(b, a, sf));
  CHECK(std::abs(ab - ba) < 1e-12);
  CHECK(std::abs(inner_product(a, b) - trace(multiply(adjoint(a, sf), b, sf))) < 1e-12);
}

TEST_CASE("semigroup property and generator decay") {
  const Dims dims{1, 3, 1};
  const SignFunction sf = SignFunction::all_anticommute(dims);
  const SpinElement a = random_element(sf, 9, 8);
  const SpinElement two_step = ou_semigroup(ou_semigroup(a, 0.3), 0.45);
  const SpinElement one_step = ou_semigroup(a, 0.75);
  for (const auto& [mask, coeff] : one_step.terms())
    CHECK(std::abs(coeff - two_step.coeff(mask)) < 1e-12);
  const SpinElement x0 = SpinElement::word(dims, WordMask{1});
  CHECK(std::abs(ou_semigroup(x0, 1.0).coeff(WordMask{1}) - std::exp(-1.0)) < 1e-15);
  // Unit is fixed.
  CHECK(ou_semigroup(SpinElement::unit(dims), 5.0).coeff(0) == cplx{1.0, 0.0});
}

TEST_CASE("sign table validation rejects malformed input") {
  const Dims dims{1, 2, 1};
  CHECK_THROWS_AS(SignFunction(dims, std::vector<std::int8_t>{1, 1, 1}),
                  std::invalid_argument);
  // Diagonal must be -1.
  CHECK_THROWS_AS(SignFunction(dims, std::vector<std::int8_t>{1, 1, 1, 1}),
                  std::invalid_argument);
  // Asymmetric table.
  CHECK_THROWS_AS(SignFunction(dims, std::vector<std::int8_t>{-1, 1, -1, -1}),
                  std::invalid_argument);
  const std::map<std::pair<GenIndex, GenIndex>, int> missing;
  CHECK_THROWS_AS(SignFunction::from_assignment(dims, missing), std::invalid_argument);
}

TEST_CASE("product_sign matches normal ordering of concatenated words") {
  const Dims dims{2, 2, 1};
  const SignFunction sf = SignFunction::all_anticommute(dims);
  const int total = dims.total();
  for (WordMask a = 0; a < (WordMask{1} << total); ++a)
    for (WordMask b = 0; b < (WordMask{1} << total); ++b) {
      std::vector<int> ids;
      for (int j = 0; j < total; ++j)
        if (a & (WordMask{1} << j)) ids.push_back(j);
      for (int j = 0; j < total; ++j)
        if (b & (WordMask{1} << j)) ids.push_back(j);
      const NormalForm nf = normal_order(ids, sf);
      CHECK(nf.word == (a ^ b));
      CHECK(nf.sign == product_sign(a, b, sf));
    }
}
