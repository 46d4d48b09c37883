#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "freehyper/clt_lab.hpp"
#include "freehyper/gns_rep.hpp"
#include "freehyper/group_words.hpp"
#include "freehyper/hyperbench.hpp"
#include "freehyper/partition_calc.hpp"
#include "freehyper/report.hpp"
#include "freehyper/spin_core.hpp"
#include "freehyper/suites.hpp"

namespace {

using nlohmann::json;
namespace fh = freehyper;

/// "alpha:i,alpha:i,..." with 1-based labels; ":i" defaults to 1.
fh::partition::WordSpec parse_word(const std::string& text) {
  fh::partition::WordSpec word;
  if (text.empty()) return word;
  std::stringstream ss(text);
  std::string letter;
  while (std::getline(ss, letter, ',')) {
    const auto colon = letter.find(':');
    const int alpha = std::stoi(letter.substr(0, colon));
    const int i = colon == std::string::npos ? 1 : std::stoi(letter.substr(colon + 1));
    if (alpha < 1 || i < 1) throw CLI::ValidationError("--word", "labels are 1-based");
    word.letters.emplace_back(alpha - 1, i - 1);
  }
  return word;
}

/// "[1,-2,1]" -> signed letters of a group word.
std::vector<int> parse_group_word(const std::string& text) {
  std::vector<int> letters;
  std::string inner = text;
  if (!inner.empty() && inner.front() == '[') inner = inner.substr(1);
  if (!inner.empty() && inner.back() == ']') inner.pop_back();
  std::stringstream ss(inner);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) letters.push_back(std::stoi(tok));
  return letters;
}

/// Accepts either a JSON file path or an inline bracketed word "[1,-2,1]"
/// (basis element; negative letters only make sense for flavor "free").
fh::group::GroupAlgebraElement load_element(const std::string& spec,
                                            const std::string& flavor_name) {
  const fh::group::Flavor flavor = flavor_name == "free_z2"
                                       ? fh::group::Flavor::FreeZ2
                                       : fh::group::Flavor::Free;
  if (!spec.empty() && spec.front() == '[') {
    return fh::group::GroupAlgebraElement::basis(
        fh::group::GroupWord(flavor, parse_group_word(spec)));
  }
  std::ifstream in(spec);
  if (!in) throw CLI::ValidationError("--element", "cannot open " + spec);
  std::stringstream buf;
  buf << in.rdbuf();
  return fh::group::element_from_json(buf.str());
}

void emit(const std::vector<fh::report::CheckRecord>& records, const std::string& out,
          const std::string& format) {
  const std::string body = format == "csv" ? fh::report::to_csv(records)
                                           : fh::report::to_json(records);
  if (out.empty() || out == "-")
    std::cout << body;
  else
    fh::report::write_file(out, body);
}

fh::report::CheckRecord config_record(const json& config, std::uint64_t seed) {
  fh::report::CheckRecord r;
  r.check = "config";
  r.params = config.dump();
  r.pass = true;
  r.seed = seed;
  return r;
}

int finish(const std::vector<fh::report::CheckRecord>& records, const std::string& out,
           const std::string& format) {
  if (records.empty()) {
    std::cerr << "error: no results produced\n";
    return 2;
  }
  emit(records, out, format);
  for (const auto& r : records)
    if (!r.pass) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"freehyper: spin/free-group semigroup contractivity toolkit"};
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "task pool size (FREEHYPER_THREADS overrides)");

  std::string out = "-";
  std::string format = "json";
  std::uint64_t seed = 1;

  // ---- moments ----
  auto* cmd_moments = app.add_subcommand("moments", "closed-form limit moment of a word");
  std::string word_text, weight_name = "free-clifford";
  int n_blocks = 0;
  double q_weight = 0.0;
  cmd_moments->add_option("--word", word_text, "letters alpha:i, 1-based")->required();
  cmd_moments->add_option("--weight", weight_name, "free-clifford | constant");
  cmd_moments->add_option("--q", q_weight, "constant weight value");
  cmd_moments->add_option("--n", n_blocks, "block count (default: max label)");
  cmd_moments->add_option("--out", out);
  cmd_moments->add_option("--format", format);

  // ---- trace ----
  auto* cmd_trace = app.add_subcommand("trace", "spin-algebra trace of a word product");
  std::string trace_word, trace_model = "car";
  int tn = 1, td = 1, tm = 1;
  cmd_trace->add_option("--word", trace_word, "letters alpha:i, 1-based")->required();
  cmd_trace->add_option("--n", tn);
  cmd_trace->add_option("--d", td);
  cmd_trace->add_option("--m", tm);
  cmd_trace->add_option("--model", trace_model, "car | theorem-b (sampled)");
  cmd_trace->add_option("--seed", seed);
  cmd_trace->add_option("--out", out);
  cmd_trace->add_option("--format", format);

  // ---- norm ----
  auto* cmd_norm = app.add_subcommand("norm", "L_p norm by the moment or spectral route");
  std::string norm_element, norm_route = "moments", norm_flavor = "free";
  double norm_p = 2.0;
  int norm_K = 10, norm_m = 2;
  cmd_norm->add_option("--element", norm_element, "group element JSON file")->required();
  cmd_norm->add_option("--p", norm_p)->required();
  cmd_norm->add_option("--route", norm_route, "moments | spectral (via spin lift)");
  cmd_norm->add_option("--flavor", norm_flavor, "free | free_z2 (for inline words)");
  cmd_norm->add_option("--K", norm_K, "quadrature nodes");
  cmd_norm->add_option("--m", norm_m, "spin copies for the spectral route");
  cmd_norm->add_option("--seed", seed);
  cmd_norm->add_option("--out", out);
  cmd_norm->add_option("--format", format);

  // ---- clt ----
  auto* cmd_clt = app.add_subcommand("clt", "Monte Carlo limit studies");
  std::string clt_study = "moments", clt_word, clt_element;
  std::vector<int> m_list{2, 4, 8};
  int trials = 4000, clt_n = 0, clt_d = 1, clt_m = 4;
  double clt_p = 2.0, clt_t = 0.0;
  cmd_clt->add_option("--study", clt_study, "moments | key-lemma | norm");
  cmd_clt->add_option("--word", clt_word, "letters alpha:i for moments/key-lemma");
  cmd_clt->add_option("--element", clt_element, "group element JSON for the norm study");
  cmd_clt->add_option("--m-list", m_list);
  cmd_clt->add_option("--m", clt_m, "copy count for key-lemma");
  cmd_clt->add_option("--trials", trials);
  cmd_clt->add_option("--n", clt_n, "blocks (default: max word label)");
  cmd_clt->add_option("--d", clt_d);
  cmd_clt->add_option("--p", clt_p);
  cmd_clt->add_option("--t", clt_t, "semigroup time for the norm study");
  cmd_clt->add_option("--seed", seed)->required();
  cmd_clt->add_option("--out", out);

  // ---- hc ----
  auto* cmd_hc = app.add_subcommand("hc", "single hypercontractivity margin");
  std::string hc_model = "spin", hc_time = "optimal", hc_element;
  int hn = 1, hd = 1, hm = 1, h_len = 2, hc_K = 8;
  double hp = 2.0, hq = 4.0, h_t = 0.0;
  cmd_hc->add_option("--model", hc_model, "spin | group");
  cmd_hc->add_option("--n", hn);
  cmd_hc->add_option("--d", hd);
  cmd_hc->add_option("--m", hm);
  cmd_hc->add_option("--length", h_len, "max word length of the random group element");
  cmd_hc->add_option("--element", hc_element, "group element JSON (default: random)");
  cmd_hc->add_option("--p", hp)->required();
  cmd_hc->add_option("--q", hq)->required();
  cmd_hc->add_option("--time", hc_time, "optimal | doubled | improvement | explicit");
  cmd_hc->add_option("--t", h_t, "time for --time explicit");
  cmd_hc->add_option("--K", hc_K);
  cmd_hc->add_option("--seed", seed)->required();
  cmd_hc->add_option("--out", out);
  cmd_hc->add_option("--format", format);

  // ---- suite ----
  auto* cmd_suite = app.add_subcommand("suite", "named acceptance suites");
  std::string suite_name = "all";
  cmd_suite->add_option("name", suite_name, "suite name or 'all'");
  cmd_suite->add_option("--seed", seed)->required();
  cmd_suite->add_option("--out", out);
  cmd_suite->add_option("--format", format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  fh::report::set_default_threads(threads);

  try {
    if (cmd_moments->parsed()) {
      const fh::partition::WordSpec word = parse_word(word_text);
      int n = n_blocks;
      for (const auto& [alpha, i] : word.letters) n = std::max(n, alpha + 1);
      n = std::max(n, 1);
      const fh::partition::WeightFunction weight =
          weight_name == "constant" ? fh::partition::WeightFunction::constant(n, q_weight)
                                    : fh::partition::WeightFunction::free_clifford(n);
      const auto start = std::chrono::steady_clock::now();
      fh::report::CheckRecord rec;
      rec.check = "moments.limit";
      rec.params =
          json{{"word", word_text}, {"weight", weight_name}, {"n", n}}.dump();
      rec.lhs = fh::partition::weighted_pair_moment(word, weight);
      rec.pass = true;
      rec.seed = seed;
      rec.wall_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
      return finish({rec}, out, format);
    }

    if (cmd_trace->parsed()) {
      const fh::partition::WordSpec word = parse_word(trace_word);
      fh::spin::SignFunction sf =
          trace_model == "theorem-b"
              ? fh::clt::sample_sign_function(
                    fh::clt::SignModel::theorem_b(tn, td, tm, seed), 0)
              : fh::spin::SignFunction::all_anticommute({tn, td, tm});
      std::vector<int> ids;
      for (const auto& [alpha, i] : word.letters)
        ids.push_back((alpha * td + i) * tm);  // copy 1 of each generator
      const fh::spin::NormalForm nf = fh::spin::normal_order(ids, sf);
      fh::report::CheckRecord rec;
      rec.check = "trace.word";
      rec.params = json{{"word", trace_word},
                        {"model", trace_model},
                        {"n", tn},
                        {"d", td},
                        {"m", tm}}
                       .dump();
      rec.lhs = nf.word == 0 ? nf.sign : 0;
      rec.pass = true;
      rec.seed = seed;
      return finish({rec}, out, format);
    }

    if (cmd_norm->parsed()) {
      const auto element = load_element(norm_element, norm_flavor);
      const auto start = std::chrono::steady_clock::now();
      double value, stab = 0.0;
      if (norm_route == "spectral") {
        const fh::clt::SignModel model = fh::clt::SignModel::theorem_b(
            [&] {
              int n = 1;
              for (const auto& [w, c] : element.terms())
                for (int j : w.letters()) n = std::max(n, std::abs(j));
              return n;
            }(),
            1, norm_m, seed);
        const fh::spin::SignFunction sf = fh::clt::sample_sign_function(model, 0);
        const auto lift =
            fh::group::spin_model_lift(element, norm_m, sf, fh::group::LiftPart::Full);
        value = fh::gns::lp_norm_spectral(lift.element, sf, norm_p);
      } else {
        const fh::group::GroupLpResult r = fh::group::group_lp_norm(element, norm_p, norm_K);
        value = r.value;
        stab = r.stabilization;
      }
      fh::report::CheckRecord rec;
      rec.check = "norm." + norm_route;
      rec.params = json{{"p", norm_p}, {"K", norm_K}, {"route", norm_route}}.dump();
      rec.lhs = value;
      rec.rhs = 0.0;
      rec.margin = stab;
      rec.tol = 0.0;
      rec.pass = true;
      rec.seed = seed;
      rec.wall_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
      return finish({config_record(json{{"command", "norm"}, {"p", norm_p}}, seed), rec},
                    out, format);
    }

    if (cmd_clt->parsed()) {
      std::vector<fh::clt::TrialReport> reports;
      if (clt_study == "key-lemma") {
        const fh::partition::WordSpec word = parse_word(clt_word);
        int n = clt_n;
        for (const auto& [alpha, i] : word.letters) n = std::max(n, alpha + 1);
        const fh::clt::SignModel model = fh::clt::SignModel::theorem_b(n, 1, clt_m, seed);
        const fh::clt::KeyLemmaReport rep =
            fh::clt::key_lemma_study(word, model, clt_m, trials);
        std::cout << "m,trials,max_abs_inner,mean_norm1_sq,stderr_norm1_sq,"
                     "exact_norm1_sq,mean_norm2_sq\n";
        std::cout.precision(17);
        std::cout << rep.m << ',' << rep.trials << ',' << rep.max_abs_inner << ','
                  << rep.mean_norm1_sq << ',' << rep.stderr_norm1_sq << ','
                  << rep.exact_norm1_sq << ',' << rep.mean_norm2_sq << "\n";
        return 0;
      }
      if (clt_study == "norm") {
        const auto element = load_element(clt_element, "free_z2");
        reports = fh::clt::norm_convergence_study(element, clt_p, m_list, trials, seed,
                                                  clt_t);
      } else {
        const fh::partition::WordSpec word = parse_word(clt_word);
        int n = clt_n;
        for (const auto& [alpha, i] : word.letters) n = std::max(n, alpha + 1);
        const fh::clt::SignModel model = fh::clt::SignModel::theorem_b(n, clt_d, 2, seed);
        reports = fh::clt::mc_moment_study(word, model, m_list, trials);
      }
      const std::string csv = fh::clt::trial_reports_csv(reports);
      if (out.empty() || out == "-")
        std::cout << csv;
      else
        fh::report::write_file(out, csv);
      return 0;
    }

    if (cmd_hc->parsed()) {
      const auto start = std::chrono::steady_clock::now();
      const fh::hyperbench::TimeRule rule =
          hc_time == "optimal"     ? fh::hyperbench::TimeRule::Optimal
          : hc_time == "doubled"   ? fh::hyperbench::TimeRule::Doubled
          : hc_time == "improvement" ? fh::hyperbench::TimeRule::Improvement
                                     : fh::hyperbench::TimeRule::Explicit;
      const double t = fh::hyperbench::resolve_time(rule, hp, hq, h_t);
      fh::hyperbench::Margin margin;
      bool conclusive = true;
      if (hc_model == "spin") {
        const fh::spin::SignFunction sf =
            hn == 1 ? fh::spin::SignFunction::all_anticommute({hn, hd, hm})
                    : fh::clt::sample_sign_function(
                          fh::clt::SignModel::theorem_b(hn, hd, hm, seed), 0);
        const fh::spin::SpinElement f = fh::hyperbench::random_spin_element(
            sf, sf.dims().total(), seed, true);
        margin = fh::hyperbench::hc_margin_spin(f, sf, hp, hq, t);
      } else {
        const fh::group::GroupAlgebraElement f =
            hc_element.empty()
                ? fh::hyperbench::random_group_element(fh::group::Flavor::Free, hn,
                                                       h_len, seed, false)
                : load_element(hc_element, "free");
        margin = fh::hyperbench::hc_margin_group(f, hp, hq, t, hc_K, 1e-6, 1e-8,
                                                 &conclusive);
      }
      fh::report::CheckRecord rec;
      rec.check = "hc." + hc_model;
      rec.params = json{{"p", hp}, {"q", hq}, {"t", t}, {"time_rule", hc_time},
                        {"conclusive", conclusive}}
                       .dump();
      rec.lhs = margin.lhs;
      rec.rhs = margin.rhs;
      rec.margin = margin.margin();
      rec.tol = margin.tol;
      rec.pass = margin.pass();
      rec.seed = seed;
      rec.wall_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
      const json config{{"command", "hc"}, {"model", hc_model}, {"p", hp}, {"q", hq},
                        {"time", hc_time}, {"seed", seed}};
      return finish({config_record(config, seed), rec}, out, format);
    }

    if (cmd_suite->parsed()) {
      const fh::suites::SuiteResult result = fh::suites::run_named(suite_name, seed);
      std::vector<fh::report::CheckRecord> records;
      records.push_back(config_record(
          json{{"command", "suite"}, {"name", suite_name}, {"seed", seed},
               {"threads", fh::report::thread_count()}},
          seed));
      for (const auto& r : result.records) records.push_back(r);
      return finish(records, out, format);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
