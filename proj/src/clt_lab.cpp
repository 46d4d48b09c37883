#include "freehyper/clt_lab.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace freehyper::clt {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Uniform in [0,1) keyed by (seed, trial, pair); order-independent.
double pair_uniform(std::uint64_t seed, std::uint64_t trial, std::uint64_t pair_key) {
  const std::uint64_t h = splitmix64(splitmix64(splitmix64(seed) ^ trial) ^ pair_key);
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

struct Stats {
  long long count = 0;
  double sum = 0.0, sum_sq = 0.0;

  void add(double x) {
    ++count;
    sum += x;
    sum_sq += x * x;
  }
  double mean() const { return count ? sum / static_cast<double>(count) : 0.0; }
  double std_error() const {
    if (count < 2) return 0.0;
    const double n = static_cast<double>(count);
    const double var = std::max(0.0, (sum_sq - n * mean() * mean()) / (n - 1.0));
    return std::sqrt(var / n);
  }
};

int block_of(int id, int d, int m) { return id / (d * m); }

/// Exact trace of x~_{i1}^{a1} ... x~_{is}^{as} for one sign table: the sum
/// over copy tuples of the normal-ordering sign of tuples collapsing to 1.
double word_trace(const partition::WordSpec& word, const spin::SignFunction& sf) {
  const int s = word.length();
  const spin::Dims dims = sf.dims();
  const int m = dims.m;
  std::vector<int> tuple(s, 0), ids(s);
  long long acc = 0;
  for (;;) {
    for (int l = 0; l < s; ++l) {
      const auto& [alpha, i] = word.letters[l];
      ids[l] = (alpha * dims.d + i) * m + tuple[l];
    }
    const spin::NormalForm nf = spin::normal_order(ids, sf);
    if (nf.word == 0) acc += nf.sign;
    int pos = s - 1;
    while (pos >= 0 && ++tuple[pos] == m) tuple[pos--] = 0;
    if (pos < 0) break;
  }
  return static_cast<double>(acc) * std::pow(static_cast<double>(m), -0.5 * s);
}

void check_word(const partition::WordSpec& word, const SignModel& model) {
  for (const auto& [alpha, i] : word.letters)
    if (alpha < 0 || alpha >= model.n || i < 0 || i >= model.d)
      throw std::invalid_argument("word letter outside the sign model dimensions");
}

}  // namespace

SignModel SignModel::theorem_b(int n, int d, int m, std::uint64_t seed) {
  std::vector<double> bias(static_cast<std::size_t>(n) * n, 0.0);
  for (int a = 0; a < n; ++a) bias[a * n + a] = -1.0;
  return SignModel{n, d, m, partition::WeightFunction(n, std::move(bias)), seed};
}

spin::SignFunction sample_sign_function(const SignModel& model,
                                        std::uint64_t trial_index) {
  const spin::Dims dims{model.n, model.d, model.m};
  const int N = dims.total();
  if (N <= 0 || N > 64) throw std::invalid_argument("sample_sign_function: n*d*m out of range");
  std::vector<std::int8_t> table(static_cast<std::size_t>(N) * N, 0);
  for (int a = 0; a < N; ++a) table[a * N + a] = -1;
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b) {
      const int alpha = block_of(a, model.d, model.m);
      const int beta = block_of(b, model.d, model.m);
      const double f = model.bias(alpha, beta);
      std::int8_t eps;
      if (alpha == beta && f == -1.0) {
        eps = -1;  // deterministic anticommutation inside the block
      } else {
        const double u = pair_uniform(model.rng_seed, trial_index,
                                      static_cast<std::uint64_t>(a) * N + b);
        eps = u < 0.5 * (1.0 + f) ? 1 : -1;
      }
      table[a * N + b] = eps;
      table[b * N + a] = eps;
    }
  return spin::SignFunction(dims, std::move(table));
}

std::vector<TrialReport> mc_moment_study(const partition::WordSpec& word,
                                         const SignModel& model,
                                         const std::vector<int>& m_list, int trials) {
  check_word(word, model);
  if (trials < 1) throw std::invalid_argument("mc_moment_study: trials must be >= 1");
  const double target = partition::weighted_pair_moment(word, model.bias);
  std::vector<TrialReport> out;
  for (int m : m_list) {
    if (m < 1) throw std::invalid_argument("mc_moment_study: m must be >= 1");
    SignModel local = model;
    local.m = m;
    Stats stats;
    for (int trial = 0; trial < trials; ++trial) {
      const spin::SignFunction sf = sample_sign_function(local, trial);
      stats.add(word_trace(word, sf));
    }
    out.push_back(TrialReport{m, trials, stats.mean(), stats.std_error(), target});
  }
  return out;
}

double exact_moment_enumeration(const partition::WordSpec& word, const SignModel& model,
                                int m) {
  check_word(word, model);
  SignModel local = model;
  local.m = m;
  const spin::Dims dims{local.n, local.d, local.m};
  const int N = dims.total();
  if (N > 4) throw std::invalid_argument("exact_moment_enumeration: n*d*m must be <= 4");

  // split pairs into deterministic (-1) and random ones with P(+1) recorded
  std::vector<std::pair<int, int>> random_pairs;
  std::vector<double> p_plus;
  std::vector<std::int8_t> base(static_cast<std::size_t>(N) * N, -1);
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b) {
      const int alpha = block_of(a, local.d, local.m);
      const int beta = block_of(b, local.d, local.m);
      const double f = local.bias(alpha, beta);
      if (alpha == beta && f == -1.0) continue;
      random_pairs.emplace_back(a, b);
      p_plus.push_back(0.5 * (1.0 + f));
    }

  const int R = static_cast<int>(random_pairs.size());
  double expectation = 0.0;
  for (std::uint32_t config = 0; config < (1u << R); ++config) {
    std::vector<std::int8_t> table = base;
    double weight = 1.0;
    for (int r = 0; r < R; ++r) {
      const bool plus = (config >> r) & 1u;
      weight *= plus ? p_plus[r] : 1.0 - p_plus[r];
      const auto [a, b] = random_pairs[r];
      table[a * N + b] = plus ? 1 : -1;
      table[b * N + a] = table[a * N + b];
    }
    if (weight == 0.0) continue;
    expectation += weight * word_trace(word, spin::SignFunction(dims, std::move(table)));
  }
  return expectation;
}

KeyLemmaReport key_lemma_study(const partition::WordSpec& word, const SignModel& model,
                               int m, int trials) {
  if (model.d != 1) throw std::invalid_argument("key_lemma_study: requires d = 1");
  check_word(word, model);
  const int s = word.length();
  std::vector<int> letters;
  letters.reserve(s);
  for (const auto& [alpha, i] : word.letters) letters.push_back(alpha + 1);
  const group::GroupWord gw(group::Flavor::FreeZ2, letters);
  if (gw.length() != s)
    throw std::invalid_argument("key_lemma_study: word must be reduced");
  const auto elem = group::GroupAlgebraElement::basis(gw);

  double exact = 1.0;
  for (int i = 0; i < s; ++i) exact *= static_cast<double>(m - i) / m;

  KeyLemmaReport rep;
  rep.m = m;
  rep.trials = trials;
  rep.exact_norm1_sq = std::max(exact, 0.0);
  Stats n1, n2;
  SignModel local = model;
  local.m = m;
  for (int trial = 0; trial < trials; ++trial) {
    const spin::SignFunction sf = sample_sign_function(local, trial);
    const spin::SpinElement full =
        group::spin_model_lift(elem, m, sf, group::LiftPart::Full).element;
    const spin::SpinElement x1 =
        group::spin_model_lift(elem, m, sf, group::LiftPart::NoRepeat).element;
    spin::SpinElement x2 = full;
    x2 -= x1;
    rep.max_abs_inner = std::max(rep.max_abs_inner, std::abs(inner_product(x1, x2)));
    const double a = norm2(x1);
    const double b = norm2(x2);
    n1.add(a * a);
    n2.add(b * b);
  }
  rep.mean_norm1_sq = n1.mean();
  rep.stderr_norm1_sq = n1.std_error();
  rep.mean_norm2_sq = n2.mean();
  return rep;
}

std::vector<TrialReport> norm_convergence_study(const group::GroupAlgebraElement& a,
                                                double p, const std::vector<int>& m_list,
                                                int trials, std::uint64_t seed, double t,
                                                int quad_K) {
  if (a.flavor() != group::Flavor::FreeZ2)
    throw std::invalid_argument("norm_convergence_study: element must be a Z2 product");
  int n = 1;
  for (const auto& [w, c] : a.terms())
    for (int j : w.letters()) n = std::max(n, j);
  const group::GroupAlgebraElement evolved = group::poisson_semigroup(a, t);
  const double target = group::group_lp_norm(evolved, p, quad_K).value;

  std::vector<TrialReport> out;
  for (int m : m_list) {
    SignModel model = SignModel::theorem_b(n, 1, m, seed);
    Stats stats;
    for (int trial = 0; trial < trials; ++trial) {
      const spin::SignFunction sf = sample_sign_function(model, trial);
      spin::SpinElement lifted =
          group::spin_model_lift(a, m, sf, group::LiftPart::Full).element;
      if (t > 0.0) lifted = spin::ou_semigroup(lifted, t);
      stats.add(gns::lp_norm_spectral(lifted, sf, p));
    }
    out.push_back(TrialReport{m, trials, stats.mean(), stats.std_error(), target});
  }
  return out;
}

std::string trial_reports_csv(const std::vector<TrialReport>& reports) {
  std::ostringstream os;
  os.precision(17);
  os << "m,trials,mean,stderr,target,abs_error\n";
  for (const auto& r : reports)
    os << r.m << ',' << r.trials << ',' << r.mean << ',' << r.std_error << ','
       << r.target << ',' << r.abs_error() << '\n';
  return os.str();
}

}  // namespace freehyper::clt
