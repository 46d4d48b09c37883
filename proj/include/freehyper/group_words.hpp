#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "freehyper/gns_rep.hpp"
#include "freehyper/spin_core.hpp"

namespace freehyper::group {

using cplx = std::complex<double>;

enum class Flavor { Free, FreeZ2 };

/// Reduced word. Letters are 1-based generator labels: signed j for the free
/// group (negative = inverse), positive j for the free product of Z2's
/// (order-2 generators, no inverses needed). Construction reduces eagerly.
class GroupWord {
 public:
  GroupWord() : flavor_(Flavor::Free) {}
  explicit GroupWord(Flavor flavor) : flavor_(flavor) {}
  GroupWord(Flavor flavor, std::vector<int> letters);

  static GroupWord identity(Flavor flavor) { return GroupWord(flavor); }
  static GroupWord generator(Flavor flavor, int j);  // j signed for Free

  Flavor flavor() const { return flavor_; }
  const std::vector<int>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool is_identity() const { return letters_.empty(); }

  GroupWord inverse() const;
  friend GroupWord operator*(const GroupWord& a, const GroupWord& b);

  friend bool operator==(const GroupWord&, const GroupWord&) = default;

 private:
  Flavor flavor_;
  std::vector<int> letters_;
};

struct GroupWordHash {
  std::size_t operator()(const GroupWord& w) const;
};

/// Finite linear combination of reduced words; no stored zeros.
class GroupAlgebraElement {
 public:
  GroupAlgebraElement() : flavor_(Flavor::Free) {}
  explicit GroupAlgebraElement(Flavor flavor) : flavor_(flavor) {}

  static GroupAlgebraElement zero(Flavor flavor) { return GroupAlgebraElement(flavor); }
  static GroupAlgebraElement unit(Flavor flavor);
  static GroupAlgebraElement basis(const GroupWord& w, cplx coeff = 1.0);

  Flavor flavor() const { return flavor_; }
  const std::unordered_map<GroupWord, cplx, GroupWordHash>& terms() const {
    return terms_;
  }
  void add_term(const GroupWord& w, cplx c);
  void reserve(std::size_t n) { terms_.reserve(n); }
  cplx coeff(const GroupWord& w) const;
  cplx trace() const { return coeff(GroupWord::identity(flavor_)); }
  std::size_t support_size() const { return terms_.size(); }
  int max_length() const;

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& o);
  GroupAlgebraElement& operator*=(cplx s);
  friend GroupAlgebraElement operator+(GroupAlgebraElement a,
                                       const GroupAlgebraElement& b) {
    return a += b;
  }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a,
                                       const GroupAlgebraElement& b) {
    return a -= b;
  }
  friend GroupAlgebraElement operator*(cplx s, GroupAlgebraElement a) { return a *= s; }

 private:
  Flavor flavor_;
  std::unordered_map<GroupWord, cplx, GroupWordHash> terms_;
};

/// Convolution product with eager word reduction.
GroupAlgebraElement reduce_multiply(const GroupAlgebraElement& a,
                                    const GroupAlgebraElement& b);
GroupAlgebraElement adjoint(const GroupAlgebraElement& a);

/// Coefficient of lambda(g) scaled by exp(-t |g|).
GroupAlgebraElement poisson_semigroup(const GroupAlgebraElement& a, double t);

/// Group homomorphism g_j -> z_{2j-1} z_{2j} from the free group into the
/// free product of Z2's on twice as many generators, extended linearly.
GroupAlgebraElement phi_embed(const GroupAlgebraElement& a);

enum class Side { Z, Z2 };

/// v_{j,k} = u_j^k + u_j^{-k} for k >= 1, v_{j,0} = 1.
GroupAlgebraElement v_basis(int j, int k);
/// Alternating ladder words: a_{j,k} starts with z_{2j-1}, b_{j,k} with z_{2j};
/// each has length k; a_{j,0} = 1 and b_{j,0} = 0 as algebra elements.
GroupAlgebraElement ladder_a(int j, int k);
GroupAlgebraElement ladder_b(int j, int k);

/// Closed-form expansion of (u_j + u_j*)^m. Side Z: sum over 0 <= k <= m/2
/// of C(m,k) v_{j,m-2k}. Side Z2: the image under the symmetric-subalgebra
/// map, i.e. the same sum with v_{j,r} replaced by a_{j,r} + b_{j,r}.
GroupAlgebraElement sym_expand(int j, int m, Side side);

/// The map Lambda on the v-basis: Lambda(v_{j,k}) = a_{j,k} + b_{j,k}.
GroupAlgebraElement lambda_map(int j, int k);

/// 2x2 matrix over the Z2-free-product algebra.
struct TwoByTwoOver {
  GroupAlgebraElement e11, e12, e21, e22;

  cplx normalized_trace() const { return 0.5 * (e11.trace() + e22.trace()); }
  friend TwoByTwoOver operator*(const TwoByTwoOver& x, const TwoByTwoOver& y);
  friend TwoByTwoOver operator+(const TwoByTwoOver& x, const TwoByTwoOver& y);
};

/// Trace-preserving *-homomorphism u_j -> [[0, z_{2j-1}], [z_{2j}, 0]],
/// extended to words multiplicatively and linearly to the algebra.
TwoByTwoOver pi_rep(const GroupAlgebraElement& a);

struct GroupLpResult {
  double value = 0.0;
  double stabilization = 0.0;
  int achieved_K = 0;
  std::size_t max_support = 0;  // largest support reached while powering
};

/// Exact moments tau((a*a)^k), k = 0..count. Powers are materialized only up
/// to the support budget; moments up to twice the highest computed power are
/// recovered by trace pairing, and the list is truncated beyond that.
std::vector<double> group_moments(const GroupAlgebraElement& a, int count,
                                  std::size_t support_budget = 2'000'000);

/// ||a||_p via exact group moments and Gauss quadrature. K may be lowered by
/// the support budget or Hankel rank; achieved_K reports the nodes used.
GroupLpResult group_lp_norm(const GroupAlgebraElement& a, double p, int K,
                            std::size_t support_budget = 2'000'000);

enum class LiftPart { Full, NoRepeat };

struct LiftResult {
  spin::SpinElement element;
  bool short_m = false;  // NoRepeat with m < word length: result is 0
};

/// Substitutes each Z2-letter z_alpha by m^{-1/2} sum_k x^alpha(k) and
/// expands in the spin algebra of sf_sample (which must have d = 1 and the
/// matching n, m). NoRepeat keeps only tuples with pairwise distinct copy
/// indices within each word.
LiftResult spin_model_lift(const GroupAlgebraElement& a, int m,
                           const spin::SignFunction& sf_sample, LiftPart part);

std::string to_json(const GroupAlgebraElement& a);
GroupAlgebraElement element_from_json(const std::string& text);

}  // namespace freehyper::group
