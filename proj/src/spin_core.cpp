#include "freehyper/spin_core.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace freehyper::spin {

SignFunction::SignFunction(Dims dims, std::vector<std::int8_t> table)
    : dims_(dims), table_(std::move(table)) {
  const int N = dims_.total();
  if (N <= 0 || N > 64) throw std::invalid_argument("SignFunction: n*d*m must be in [1,64]");
  if (static_cast<int>(table_.size()) != N * N)
    throw std::invalid_argument("SignFunction: table size mismatch");
  for (int a = 0; a < N; ++a) {
    if (table_[a * N + a] != -1)
      throw std::invalid_argument("SignFunction: diagonal must be -1");
    for (int b = 0; b < N; ++b) {
      if (table_[a * N + b] != 1 && table_[a * N + b] != -1)
        throw std::invalid_argument("SignFunction: values must be +-1");
      if (table_[a * N + b] != table_[b * N + a])
        throw std::invalid_argument("SignFunction: table must be symmetric");
    }
  }
}

SignFunction SignFunction::all_anticommute(Dims dims) {
  const int N = dims.total();
  return SignFunction(dims, std::vector<std::int8_t>(N * N, -1));
}

int SignFunction::flatten(const GenIndex& g) const {
  if (g.alpha < 0 || g.alpha >= dims_.n || g.i < 0 || g.i >= dims_.d || g.k < 0 ||
      g.k >= dims_.m)
    throw std::out_of_range("GenIndex out of bounds");
  return (g.alpha * dims_.d + g.i) * dims_.m + g.k;
}

GenIndex SignFunction::unflatten(int id) const {
  GenIndex g;
  g.k = id % dims_.m;
  id /= dims_.m;
  g.i = id % dims_.d;
  g.alpha = id / dims_.d;
  return g;
}

SignFunction SignFunction::from_assignment(
    Dims dims, const std::map<std::pair<GenIndex, GenIndex>, int>& assignment) {
  const int N = dims.total();
  std::vector<std::int8_t> table(N * N, 0);
  for (int a = 0; a < N; ++a) table[a * N + a] = -1;

  SignFunction probe = all_anticommute(dims);  // reuse flatten/bounds checks
  for (const auto& [pair, value] : assignment) {
    if (value != 1 && value != -1)
      throw std::invalid_argument("SignFunction assignment: value outside {-1,+1}");
    const int a = probe.flatten(pair.first);
    const int b = probe.flatten(pair.second);
    if (a == b) continue;  // diagonal is forced to -1 regardless
    table[a * N + b] = static_cast<std::int8_t>(value);
    table[b * N + a] = static_cast<std::int8_t>(value);
  }
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b)
      if (table[a * N + b] == 0)
        throw std::invalid_argument("SignFunction assignment: missing off-diagonal pair");
  return SignFunction(dims, std::move(table));
}

namespace {

struct NullSink {
  void operator()(int, int) const {}
};

template <class PairSink>
NormalForm normal_order_impl(std::span<const int> ids, const SignFunction& sf,
                             PairSink&& sink) {
  const int N = sf.dims().total();
  int sign = 1;
  std::vector<int> buf;
  buf.reserve(ids.size());
  for (int x : ids) {
    if (x < 0 || x >= N) throw std::out_of_range("normal_order: index out of bounds");
    int j = static_cast<int>(buf.size()) - 1;
    while (j >= 0 && buf[j] > x) {
      sign *= sf.eps(buf[j], x);
      sink(buf[j], x);
      --j;
    }
    if (j >= 0 && buf[j] == x) {
      buf.erase(buf.begin() + j);  // x^2 = 1
    } else {
      buf.insert(buf.begin() + j + 1, x);
    }
  }
  WordMask mask = 0;
  for (int id : buf) mask |= WordMask{1} << id;
  return {sign, mask};
}

}  // namespace

NormalForm normal_order(std::span<const int> ids, const SignFunction& sf) {
  return normal_order_impl(ids, sf, NullSink{});
}

NormalForm normal_order_trace(std::span<const int> ids, const SignFunction& sf,
                              std::vector<std::pair<int, int>>& pairs_out) {
  return normal_order_impl(ids, sf, [&pairs_out](int a, int b) {
    pairs_out.emplace_back(std::min(a, b), std::max(a, b));
  });
}

int product_sign(WordMask a, WordMask b, const SignFunction& sf) {
  int sign = 1;
  WordMask bb = b;
  while (bb) {
    const int j = std::countr_zero(bb);
    bb &= bb - 1;
    WordMask above = a & ~((WordMask{2} << j) - 1);  // bits of a strictly above j
    while (above) {
      const int i = std::countr_zero(above);
      above &= above - 1;
      sign *= sf.eps(i, j);
    }
  }
  return sign;
}

SpinElement SpinElement::unit(Dims dims) {
  SpinElement e(dims);
  e.terms_[0] = 1.0;
  return e;
}

SpinElement SpinElement::generator(const SignFunction& sf, GenIndex g) {
  SpinElement e(sf.dims());
  e.terms_[WordMask{1} << sf.flatten(g)] = 1.0;
  return e;
}

SpinElement SpinElement::word(Dims dims, WordMask mask, cplx coeff) {
  SpinElement e(dims);
  if (coeff != 0.0) e.terms_[mask] = coeff;
  return e;
}

cplx SpinElement::coeff(WordMask mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? cplx{0.0} : it->second;
}

void SpinElement::add_term(WordMask mask, cplx c) {
  auto [it, inserted] = terms_.try_emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  } else if (c == 0.0) {
    terms_.erase(it);
  }
}

int SpinElement::degree() const {
  int deg = 0;
  for (const auto& [mask, c] : terms_) deg = std::max(deg, std::popcount(mask));
  return deg;
}

SpinElement& SpinElement::operator+=(const SpinElement& other) {
  for (const auto& [mask, c] : other.terms_) add_term(mask, c);
  return *this;
}

SpinElement& SpinElement::operator-=(const SpinElement& other) {
  for (const auto& [mask, c] : other.terms_) add_term(mask, -c);
  return *this;
}

SpinElement& SpinElement::operator*=(cplx scalar) {
  if (scalar == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mask, c] : terms_) c *= scalar;
  return *this;
}

void SpinElement::prune(double rel_tol) {
  double max_mod = 0.0;
  for (const auto& [mask, c] : terms_) max_mod = std::max(max_mod, std::abs(c));
  const double cutoff = rel_tol * max_mod;
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) < cutoff)
      it = terms_.erase(it);
    else
      ++it;
  }
}

SpinElement multiply(const SpinElement& a, const SpinElement& b, const SignFunction& sf) {
  if (!(a.dims() == sf.dims()) || !(b.dims() == sf.dims()))
    throw std::invalid_argument("multiply: mismatched sign functions");
  SpinElement out(sf.dims());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      const int sign = product_sign(ma, mb, sf);
      out.add_term(ma ^ mb, ca * cb * static_cast<double>(sign));
    }
  out.prune();
  return out;
}

SpinElement adjoint(const SpinElement& a, const SignFunction& sf) {
  if (!(a.dims() == sf.dims()))
    throw std::invalid_argument("adjoint: mismatched sign function");
  SpinElement out(sf.dims());
  for (const auto& [mask, c] : a.terms()) {
    // (x_{a1}...x_{as})* = x_{as}...x_{a1}; sorting back costs eps on all pairs.
    int sign = 1;
    WordMask rest = mask;
    while (rest) {
      const int j = std::countr_zero(rest);
      rest &= rest - 1;
      WordMask above = rest;
      while (above) {
        const int i = std::countr_zero(above);
        above &= above - 1;
        sign *= sf.eps(i, j);
      }
    }
    out.add_term(mask, std::conj(c) * static_cast<double>(sign));
  }
  return out;
}

cplx trace(const SpinElement& a) { return a.coeff(0); }

cplx inner_product(const SpinElement& a, const SpinElement& b) {
  // orthonormal word basis: <a,b> = sum conj(a_w) b_w
  const auto& small = a.terms().size() <= b.terms().size() ? a : b;
  const auto& large = a.terms().size() <= b.terms().size() ? b : a;
  cplx out = 0.0;
  for (const auto& [mask, c] : small.terms()) {
    auto it = large.terms().find(mask);
    if (it == large.terms().end()) continue;
    out += (&small == &a) ? std::conj(c) * it->second : std::conj(it->second) * c;
  }
  return out;
}

double norm2(const SpinElement& a) {
  double s = 0.0;
  for (const auto& [mask, c] : a.terms()) s += std::norm(c);
  return std::sqrt(s);
}

SpinElement ou_semigroup(const SpinElement& a, double t) {
  if (t < 0.0) throw std::invalid_argument("ou_semigroup: negative time");
  SpinElement out(a.dims());
  for (const auto& [mask, c] : a.terms())
    out.add_term(mask, c * std::exp(-t * std::popcount(mask)));
  return out;
}

}  // namespace freehyper::spin
