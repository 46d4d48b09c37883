#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace freehyper::spin {

using cplx = std::complex<double>;

/// Index of a single generator: factor label `alpha` in [0,n), generator
/// label `i` in [0,d), copy label `k` in [0,m). Ordered lexicographically.
struct GenIndex {
  int alpha = 0;
  int i = 0;
  int k = 0;

  friend auto operator<=>(const GenIndex&, const GenIndex&) = default;
};

struct Dims {
  int n = 0, d = 0, m = 0;
  int total() const { return n * d * m; }
  friend bool operator==(const Dims&, const Dims&) = default;
};

/// Symmetric sign table on generator pairs, -1 on the diagonal. The table is
/// stored densely on flattened indices id = (alpha*d + i)*m + k.
class SignFunction {
 public:
  SignFunction(Dims dims, std::vector<std::int8_t> table);

  /// All pairs anticommute (the CAR table; single Clifford when n = m = 1).
  static SignFunction all_anticommute(Dims dims);

  /// Build from an explicit assignment on unordered off-diagonal pairs.
  /// Every pair must be present and map to +1 or -1.
  static SignFunction from_assignment(
      Dims dims, const std::map<std::pair<GenIndex, GenIndex>, int>& assignment);

  int eps(int id_a, int id_b) const { return table_[id_a * dims_.total() + id_b]; }
  int eps(const GenIndex& a, const GenIndex& b) const { return eps(flatten(a), flatten(b)); }

  const Dims& dims() const { return dims_; }

  int flatten(const GenIndex& g) const;
  GenIndex unflatten(int id) const;

 private:
  Dims dims_;
  std::vector<std::int8_t> table_;  // dense N*N, symmetric, -1 on diagonal
};

/// Canonical spin word as a bitmask over flattened generator indices.
/// Bit b set means the generator with id b occurs (ids strictly increase
/// left to right in the word). The empty mask is the unit.
using WordMask = std::uint64_t;

struct NormalForm {
  int sign = 1;       // 0 when the coefficient vanishes (cannot happen here)
  WordMask word = 0;
};

/// Normal-order an arbitrary product of generators given by flattened ids:
/// returns (sign, word) with product = sign * x_word. Insertion sort with one
/// eps lookup per transposition; equal neighbours collapse via x^2 = 1.
NormalForm normal_order(std::span<const int> ids, const SignFunction& sf);

/// Same, but also reports every eps-pair consumed during the reordering as
/// flattened unordered id pairs (a transposition of ids a,b appends {a,b}).
/// The returned sign is the product of eps over exactly those pairs.
NormalForm normal_order_trace(std::span<const int> ids, const SignFunction& sf,
                              std::vector<std::pair<int, int>>& pairs_out);

/// Sign of x_A * x_B as basis words: prod over b in B, a in A with a > b of
/// eps(a, b); the resulting word mask is A xor B.
int product_sign(WordMask a, WordMask b, const SignFunction& sf);

/// Finite linear combination of canonical spin words.
class SpinElement {
 public:
  SpinElement() = default;
  explicit SpinElement(Dims dims) : dims_(dims) {}

  static SpinElement unit(Dims dims);
  static SpinElement generator(const SignFunction& sf, GenIndex g);
  static SpinElement word(Dims dims, WordMask mask, cplx coeff = 1.0);

  const Dims& dims() const { return dims_; }
  const std::unordered_map<WordMask, cplx>& terms() const { return terms_; }

  cplx coeff(WordMask mask) const;
  void add_term(WordMask mask, cplx c);
  bool empty() const { return terms_.empty(); }
  int degree() const;

  SpinElement& operator+=(const SpinElement& other);
  SpinElement& operator-=(const SpinElement& other);
  SpinElement& operator*=(cplx scalar);
  friend SpinElement operator+(SpinElement a, const SpinElement& b) { return a += b; }
  friend SpinElement operator-(SpinElement a, const SpinElement& b) { return a -= b; }
  friend SpinElement operator*(cplx s, SpinElement a) { return a *= s; }

  /// Drop terms with modulus below rel_tol * (max term modulus).
  void prune(double rel_tol = 1e-14);

 private:
  Dims dims_;
  std::unordered_map<WordMask, cplx> terms_;
};

SpinElement multiply(const SpinElement& a, const SpinElement& b, const SignFunction& sf);
SpinElement adjoint(const SpinElement& a, const SignFunction& sf);
cplx trace(const SpinElement& a);

/// <a, b> = trace(a* b). The word basis is orthonormal, so this is just the
/// coefficient pairing.
cplx inner_product(const SpinElement& a, const SpinElement& b);
double norm2(const SpinElement& a);

/// Multiplies the coefficient of each word of length s by exp(-t*s).
SpinElement ou_semigroup(const SpinElement& a, double t);

}  // namespace freehyper::spin
