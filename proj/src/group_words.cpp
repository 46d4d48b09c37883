#include "freehyper/group_words.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace freehyper::group {

namespace {

void check_letter(Flavor flavor, int j) {
  if (flavor == Flavor::Free) {
    if (j == 0) throw std::invalid_argument("GroupWord: free-group letter must be nonzero");
  } else {
    if (j <= 0) throw std::invalid_argument("GroupWord: Z2 letter must be positive");
  }
}

bool cancels(Flavor flavor, int a, int b) {
  return flavor == Flavor::Free ? a == -b : a == b;
}

}  // namespace

GroupWord::GroupWord(Flavor flavor, std::vector<int> letters) : flavor_(flavor) {
  letters_.reserve(letters.size());
  for (int j : letters) {
    check_letter(flavor, j);
    if (!letters_.empty() && cancels(flavor, letters_.back(), j))
      letters_.pop_back();
    else
      letters_.push_back(j);
  }
}

GroupWord GroupWord::generator(Flavor flavor, int j) {
  check_letter(flavor, j);
  return GroupWord(flavor, {j});
}

GroupWord GroupWord::inverse() const {
  std::vector<int> rev(letters_.rbegin(), letters_.rend());
  if (flavor_ == Flavor::Free)
    for (int& j : rev) j = -j;
  GroupWord out(flavor_);
  out.letters_ = std::move(rev);  // reversal of a reduced word stays reduced
  return out;
}

GroupWord operator*(const GroupWord& a, const GroupWord& b) {
  if (a.flavor_ != b.flavor_) throw std::invalid_argument("GroupWord: flavor mismatch");
  GroupWord out(a.flavor_);
  out.letters_ = a.letters_;
  for (int j : b.letters_) {
    if (!out.letters_.empty() && cancels(a.flavor_, out.letters_.back(), j))
      out.letters_.pop_back();
    else
      out.letters_.push_back(j);
  }
  return out;
}

std::size_t GroupWordHash::operator()(const GroupWord& w) const {
  std::size_t h = w.flavor() == Flavor::Free ? 0x9e3779b97f4a7c15ull : 0xc2b2ae3d27d4eb4full;
  for (int j : w.letters()) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(j)) + 0x9e3779b9u +
         (h << 6) + (h >> 2);
  }
  return h;
}

GroupAlgebraElement GroupAlgebraElement::unit(Flavor flavor) {
  GroupAlgebraElement e(flavor);
  e.terms_[GroupWord::identity(flavor)] = 1.0;
  return e;
}

GroupAlgebraElement GroupAlgebraElement::basis(const GroupWord& w, cplx coeff) {
  GroupAlgebraElement e(w.flavor());
  if (coeff != 0.0) e.terms_[w] = coeff;
  return e;
}

void GroupAlgebraElement::add_term(const GroupWord& w, cplx c) {
  if (w.flavor() != flavor_)
    throw std::invalid_argument("GroupAlgebraElement: flavor mismatch");
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  } else if (c == 0.0) {
    terms_.erase(it);
  }
}

cplx GroupAlgebraElement::coeff(const GroupWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? cplx{0.0} : it->second;
}

int GroupAlgebraElement::max_length() const {
  int len = 0;
  for (const auto& [w, c] : terms_) len = std::max(len, w.length());
  return len;
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(cplx s) {
  if (s == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

GroupAlgebraElement reduce_multiply(const GroupAlgebraElement& a,
                                    const GroupAlgebraElement& b) {
  if (a.flavor() != b.flavor())
    throw std::invalid_argument("reduce_multiply: flavor mismatch");
  GroupAlgebraElement out(a.flavor());
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) out.add_term(wa * wb, ca * cb);
  return out;
}

GroupAlgebraElement adjoint(const GroupAlgebraElement& a) {
  GroupAlgebraElement out(a.flavor());
  for (const auto& [w, c] : a.terms()) out.add_term(w.inverse(), std::conj(c));
  return out;
}

GroupAlgebraElement poisson_semigroup(const GroupAlgebraElement& a, double t) {
  if (t < 0.0) throw std::invalid_argument("poisson_semigroup: negative time");
  GroupAlgebraElement out(a.flavor());
  for (const auto& [w, c] : a.terms()) out.add_term(w, c * std::exp(-t * w.length()));
  return out;
}

GroupAlgebraElement phi_embed(const GroupAlgebraElement& a) {
  if (a.flavor() != Flavor::Free)
    throw std::invalid_argument("phi_embed: input must live over the free group");
  GroupAlgebraElement out(Flavor::FreeZ2);
  for (const auto& [w, c] : a.terms()) {
    std::vector<int> letters;
    letters.reserve(2 * w.letters().size());
    for (int j : w.letters()) {
      if (j > 0) {
        letters.push_back(2 * j - 1);
        letters.push_back(2 * j);
      } else {
        letters.push_back(-2 * j);
        letters.push_back(-2 * j - 1);
      }
    }
    out.add_term(GroupWord(Flavor::FreeZ2, std::move(letters)), c);
  }
  return out;
}

GroupAlgebraElement v_basis(int j, int k) {
  if (j <= 0 || k < 0) throw std::invalid_argument("v_basis: need j >= 1, k >= 0");
  if (k == 0) return GroupAlgebraElement::unit(Flavor::Free);
  GroupAlgebraElement out(Flavor::Free);
  out.add_term(GroupWord(Flavor::Free, std::vector<int>(k, j)), 1.0);
  out.add_term(GroupWord(Flavor::Free, std::vector<int>(k, -j)), 1.0);
  return out;
}

namespace {

GroupWord alternating_word(int first, int second, int k) {
  std::vector<int> letters(k);
  for (int i = 0; i < k; ++i) letters[i] = (i % 2 == 0) ? first : second;
  return GroupWord(Flavor::FreeZ2, std::move(letters));
}

}  // namespace

GroupAlgebraElement ladder_a(int j, int k) {
  if (j <= 0 || k < 0) throw std::invalid_argument("ladder_a: need j >= 1, k >= 0");
  if (k == 0) return GroupAlgebraElement::unit(Flavor::FreeZ2);
  return GroupAlgebraElement::basis(alternating_word(2 * j - 1, 2 * j, k));
}

GroupAlgebraElement ladder_b(int j, int k) {
  if (j <= 0 || k < 0) throw std::invalid_argument("ladder_b: need j >= 1, k >= 0");
  if (k == 0) return GroupAlgebraElement::zero(Flavor::FreeZ2);
  return GroupAlgebraElement::basis(alternating_word(2 * j, 2 * j - 1, k));
}

GroupAlgebraElement lambda_map(int j, int k) { return ladder_a(j, k) + ladder_b(j, k); }

GroupAlgebraElement sym_expand(int j, int m, Side side) {
  if (j <= 0 || m < 0) throw std::invalid_argument("sym_expand: need j >= 1, m >= 0");
  // C(m, k) for k = 0..m/2
  std::vector<double> binom(m + 1, 0.0);
  binom[0] = 1.0;
  for (int row = 1; row <= m; ++row)
    for (int col = row; col >= 1; --col) binom[col] += binom[col - 1];
  GroupAlgebraElement out(side == Side::Z ? Flavor::Free : Flavor::FreeZ2);
  for (int k = 0; 2 * k <= m; ++k) {
    const int r = m - 2 * k;
    GroupAlgebraElement basis =
        side == Side::Z ? v_basis(j, r) : lambda_map(j, r);
    out += binom[k] * std::move(basis);
  }
  return out;
}

TwoByTwoOver operator*(const TwoByTwoOver& x, const TwoByTwoOver& y) {
  TwoByTwoOver out;
  out.e11 = reduce_multiply(x.e11, y.e11) + reduce_multiply(x.e12, y.e21);
  out.e12 = reduce_multiply(x.e11, y.e12) + reduce_multiply(x.e12, y.e22);
  out.e21 = reduce_multiply(x.e21, y.e11) + reduce_multiply(x.e22, y.e21);
  out.e22 = reduce_multiply(x.e21, y.e12) + reduce_multiply(x.e22, y.e22);
  return out;
}

TwoByTwoOver operator+(const TwoByTwoOver& x, const TwoByTwoOver& y) {
  return {x.e11 + y.e11, x.e12 + y.e12, x.e21 + y.e21, x.e22 + y.e22};
}

namespace {

TwoByTwoOver pi_generator(int j) {
  // u_j -> [[0, z_{2j-1}], [z_{2j}, 0]]; the inverse is the adjoint
  const int aj = std::abs(j);
  const int upper = j > 0 ? 2 * aj - 1 : 2 * aj;
  const int lower = j > 0 ? 2 * aj : 2 * aj - 1;
  TwoByTwoOver out;
  out.e11 = GroupAlgebraElement::zero(Flavor::FreeZ2);
  out.e22 = GroupAlgebraElement::zero(Flavor::FreeZ2);
  out.e12 = GroupAlgebraElement::basis(GroupWord::generator(Flavor::FreeZ2, upper));
  out.e21 = GroupAlgebraElement::basis(GroupWord::generator(Flavor::FreeZ2, lower));
  return out;
}

TwoByTwoOver pi_identity() {
  TwoByTwoOver out;
  out.e11 = GroupAlgebraElement::unit(Flavor::FreeZ2);
  out.e22 = GroupAlgebraElement::unit(Flavor::FreeZ2);
  out.e12 = GroupAlgebraElement::zero(Flavor::FreeZ2);
  out.e21 = GroupAlgebraElement::zero(Flavor::FreeZ2);
  return out;
}

TwoByTwoOver scale(TwoByTwoOver x, cplx s) {
  x.e11 *= s;
  x.e12 *= s;
  x.e21 *= s;
  x.e22 *= s;
  return x;
}

}  // namespace

TwoByTwoOver pi_rep(const GroupAlgebraElement& a) {
  if (a.flavor() != Flavor::Free)
    throw std::invalid_argument("pi_rep: input must live over the free group");
  TwoByTwoOver acc;
  acc.e11 = GroupAlgebraElement::zero(Flavor::FreeZ2);
  acc.e12 = acc.e11;
  acc.e21 = acc.e11;
  acc.e22 = acc.e11;
  for (const auto& [w, c] : a.terms()) {
    TwoByTwoOver word_mat = pi_identity();
    for (int j : w.letters()) word_mat = word_mat * pi_generator(j);
    acc = acc + scale(std::move(word_mat), c);
  }
  return acc;
}

namespace {

// Multiplies within the support budget; returns false (and leaves the partial
// product untrusted) as soon as the accumulating support exceeds the budget,
// so runaway powers never materialize.
bool budgeted_multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b,
                       std::size_t support_budget, GroupAlgebraElement& out) {
  out = GroupAlgebraElement::zero(a.flavor());
  out.reserve(std::min(support_budget + 1, a.support_size() * b.support_size()));
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) out.add_term(wa * wb, ca * cb);
    if (out.support_size() > support_budget) return false;
  }
  return true;
}

std::vector<double> moments_impl(const GroupAlgebraElement& a, int count,
                                 std::size_t support_budget,
                                 std::size_t* max_support) {
  std::vector<double> out{1.0};
  const GroupAlgebraElement b = reduce_multiply(adjoint(a), a);
  std::size_t peak = 1;

  // Power b while the budget allows; every computed power is kept because the
  // pairing below squeezes moments up to twice the highest power out of them.
  std::vector<GroupAlgebraElement> powers{GroupAlgebraElement::unit(a.flavor())};
  while (2 * (static_cast<int>(powers.size()) - 1) < count) {
    const GroupAlgebraElement& pow = powers.back();
    // A further power at least doubles nothing in general, but supports only
    // shrink in degenerate cases; skip the attempt when even doubling would
    // overrun the budget rather than materialize a doomed product.
    if (powers.size() > 1 && pow.support_size() * 2 > support_budget) break;
    GroupAlgebraElement next(a.flavor());
    const bool ok = budgeted_multiply(pow, b, support_budget, next);
    peak = std::max(peak, next.support_size());
    if (!ok) break;
    powers.push_back(std::move(next));
    out.push_back(powers.back().trace().real());
  }

  // tau(b^{j}) = sum_w c_{j-k}(w) c_k(w^{-1}): moments beyond the last power
  // cost only lookups against the largest power.
  const int kmax = static_cast<int>(powers.size()) - 1;
  for (int j = kmax + 1; j <= std::min(count, 2 * kmax); ++j) {
    const GroupAlgebraElement& small = powers[j - kmax];
    const GroupAlgebraElement& large = powers[kmax];
    cplx acc = 0.0;
    for (const auto& [w, c] : small.terms()) acc += c * large.coeff(w.inverse());
    out.push_back(acc.real());
  }
  if (max_support) *max_support = peak;
  return out;
}

}  // namespace

std::vector<double> group_moments(const GroupAlgebraElement& a, int count,
                                  std::size_t support_budget) {
  return moments_impl(a, count, support_budget, nullptr);
}

GroupLpResult group_lp_norm(const GroupAlgebraElement& a, double p, int K,
                            std::size_t support_budget) {
  if (K < 1) throw std::invalid_argument("group_lp_norm: K must be >= 1");
  GroupLpResult res;
  std::vector<double> moments = moments_impl(a, 2 * K, support_budget, &res.max_support);
  const int K_eff = std::min<int>(K, static_cast<int>(moments.size() - 1) / 2);
  if (K_eff < 1)
    throw std::invalid_argument("group_lp_norm: support budget too small for one node");
  moments.resize(2 * K_eff + 1);
  const gns::QuadratureResult q = gns::lp_norm_moments(moments, p, K_eff);
  res.value = q.value;
  res.stabilization = q.stabilization;
  res.achieved_K = q.achieved_K;
  return res;
}

LiftResult spin_model_lift(const GroupAlgebraElement& a, int m,
                           const spin::SignFunction& sf_sample, LiftPart part) {
  if (a.flavor() != Flavor::FreeZ2)
    throw std::invalid_argument("spin_model_lift: input must live over the Z2 product");
  const spin::Dims dims = sf_sample.dims();
  if (dims.d != 1) throw std::invalid_argument("spin_model_lift: sign function needs d = 1");
  if (dims.m != m) throw std::invalid_argument("spin_model_lift: copy count mismatch");

  LiftResult res;
  res.element = spin::SpinElement(dims);
  for (const auto& [w, c] : a.terms()) {
    const int s = w.length();
    for (int j : w.letters())
      if (j > dims.n)
        throw std::invalid_argument("spin_model_lift: word letter exceeds block count");
    if (part == LiftPart::NoRepeat && m < s) {
      res.short_m = true;
      continue;
    }
    const double scale = std::pow(static_cast<double>(m), -0.5 * s);
    std::vector<int> tuple(s, 0), ids(s);
    for (;;) {
      bool keep = true;
      if (part == LiftPart::NoRepeat) {
        for (int i = 0; keep && i < s; ++i)
          for (int l = i + 1; l < s; ++l)
            if (tuple[i] == tuple[l]) {
              keep = false;
              break;
            }
      }
      if (keep) {
        for (int i = 0; i < s; ++i)
          ids[i] = (w.letters()[i] - 1) * m + tuple[i];  // d = 1 flattening
        const spin::NormalForm nf = spin::normal_order(ids, sf_sample);
        res.element.add_term(nf.word, c * scale * static_cast<double>(nf.sign));
      }
      // odometer over [m]^s
      int pos = s - 1;
      while (pos >= 0 && ++tuple[pos] == m) tuple[pos--] = 0;
      if (pos < 0) break;
    }
  }
  return res;
}

std::string to_json(const GroupAlgebraElement& a) {
  nlohmann::json j;
  j["flavor"] = a.flavor() == Flavor::Free ? "free" : "free_z2";
  j["terms"] = nlohmann::json::array();
  for (const auto& [w, c] : a.terms()) {
    nlohmann::json t;
    t["word"] = w.letters();
    t["re"] = c.real();
    t["im"] = c.imag();
    j["terms"].push_back(std::move(t));
  }
  return j.dump();
}

GroupAlgebraElement element_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  const std::string flavor_name = j.at("flavor").get<std::string>();
  Flavor flavor;
  if (flavor_name == "free")
    flavor = Flavor::Free;
  else if (flavor_name == "free_z2")
    flavor = Flavor::FreeZ2;
  else
    throw std::invalid_argument("element_from_json: unknown flavor " + flavor_name);
  GroupAlgebraElement out(flavor);
  for (const auto& t : j.at("terms")) {
    const std::vector<int> letters = t.at("word").get<std::vector<int>>();
    out.add_term(GroupWord(flavor, letters),
                 cplx{t.at("re").get<double>(), t.at("im").get<double>()});
  }
  return out;
}

}  // namespace freehyper::group
