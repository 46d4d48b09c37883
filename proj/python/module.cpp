#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "freehyper/clt_lab.hpp"
#include "freehyper/gns_rep.hpp"
#include "freehyper/group_words.hpp"
#include "freehyper/hyperbench.hpp"
#include "freehyper/partition_calc.hpp"
#include "freehyper/report.hpp"
#include "freehyper/spin_core.hpp"
#include "freehyper/suites.hpp"

namespace py = pybind11;
using namespace freehyper;

namespace {

partition::WordSpec make_word(const std::vector<std::pair<int, int>>& letters) {
  return partition::WordSpec{letters};
}

partition::WeightFunction make_weight(const std::string& kind, int n, double q) {
  if (kind == "free-clifford") return partition::WeightFunction::free_clifford(n);
  if (kind == "constant") return partition::WeightFunction::constant(n, q);
  throw std::invalid_argument("weight kind must be 'free-clifford' or 'constant'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "spin/free-group semigroup contractivity toolkit";

  m.def(
      "weighted_pair_moment",
      [](const std::vector<std::pair<int, int>>& letters, const std::string& weight,
         int n, double q) {
        int blocks = n;
        for (const auto& [alpha, i] : letters) blocks = std::max(blocks, alpha + 1);
        blocks = std::max(blocks, 1);
        return partition::weighted_pair_moment(make_word(letters),
                                               make_weight(weight, blocks, q));
      },
      py::arg("letters"), py::arg("weight") = "free-clifford", py::arg("n") = 0,
      py::arg("q") = 0.0,
      "Closed-form limit moment of a word given as (alpha, i) 0-based letters.");

  m.def(
      "pair_partition_count",
      [](int s) { return partition::enumerate_pair_partitions(s).size(); },
      py::arg("s"));

  m.def("optimal_time", &hyperbench::optimal_time, py::arg("p"), py::arg("q"));
  m.def("doubled_time", &hyperbench::doubled_time, py::arg("p"), py::arg("q"));
  m.def("improvement_time", &hyperbench::improvement_time, py::arg("p"));
  m.def(
      "beta_scan",
      [](const std::vector<double>& grid) {
        return hyperbench::beta_scan(grid.empty() ? hyperbench::beta_default_grid()
                                                  : grid);
      },
      py::arg("grid") = std::vector<double>{});

  m.def(
      "group_lp_norm",
      [](const std::string& element_json, double p, int K) {
        const auto e = group::element_from_json(element_json);
        const group::GroupLpResult r = group::group_lp_norm(e, p, K);
        return py::make_tuple(r.value, r.stabilization, r.achieved_K);
      },
      py::arg("element_json"), py::arg("p"), py::arg("K") = 10,
      "L_p norm of a group-algebra element (JSON) by moment quadrature; "
      "returns (value, stabilization, achieved_K).");

  m.def(
      "group_trace_power",
      [](const std::string& element_json, int k) {
        const auto e = group::element_from_json(element_json);
        auto pow = group::GroupAlgebraElement::unit(e.flavor());
        for (int i = 0; i < k; ++i) pow = reduce_multiply(pow, e);
        return pow.trace();
      },
      py::arg("element_json"), py::arg("k"),
      "Trace of the k-th power of a group-algebra element (JSON).");

  m.def(
      "hc_margin_spin",
      [](int n, int d, int m, double p, double q, const std::string& time_rule,
         std::uint64_t seed) {
        const spin::SignFunction sf =
            n == 1 ? spin::SignFunction::all_anticommute({n, d, m})
                   : clt::sample_sign_function(clt::SignModel::theorem_b(n, d, m, seed),
                                               0);
        const spin::SpinElement f =
            hyperbench::random_spin_element(sf, sf.dims().total(), seed, true);
        const hyperbench::TimeRule rule =
            time_rule == "optimal"     ? hyperbench::TimeRule::Optimal
            : time_rule == "doubled"   ? hyperbench::TimeRule::Doubled
            : time_rule == "improvement" ? hyperbench::TimeRule::Improvement
                                         : hyperbench::TimeRule::Explicit;
        const double t = hyperbench::resolve_time(rule, p, q);
        const hyperbench::Margin mg = hyperbench::hc_margin_spin(f, sf, p, q, t);
        return py::make_tuple(mg.lhs, mg.rhs, mg.margin());
      },
      py::arg("n"), py::arg("d"), py::arg("m"), py::arg("p"), py::arg("q"),
      py::arg("time_rule") = "optimal", py::arg("seed") = 1,
      "Hypercontractivity margin of a seeded random self-adjoint spin element.");

  m.def(
      "mc_moment_study",
      [](const std::vector<std::pair<int, int>>& letters, int n, int d,
         const std::vector<int>& m_list, int trials, std::uint64_t seed) {
        const clt::SignModel model = clt::SignModel::theorem_b(n, d, 2, seed);
        const auto reports = clt::mc_moment_study(make_word(letters), model, m_list, trials);
        py::list rows;
        for (const auto& r : reports)
          rows.append(py::dict(py::arg("m") = r.m, py::arg("trials") = r.trials,
                               py::arg("mean") = r.mean, py::arg("stderr") = r.std_error,
                               py::arg("target") = r.target,
                               py::arg("abs_error") = r.abs_error()));
        return rows;
      },
      py::arg("letters"), py::arg("n"), py::arg("d"), py::arg("m_list"),
      py::arg("trials"), py::arg("seed"));

  m.def(
      "run_suite",
      [](const std::string& name, std::uint64_t seed) {
        const suites::SuiteResult result = suites::run_named(name, seed);
        py::list rows;
        for (const auto& r : result.records)
          rows.append(py::dict(py::arg("check") = r.check, py::arg("params") = r.params,
                               py::arg("lhs") = r.lhs, py::arg("rhs") = r.rhs,
                               py::arg("margin") = r.margin, py::arg("tol") = r.tol,
                               py::arg("pass") = r.pass, py::arg("seed") = r.seed,
                               py::arg("wall_ms") = r.wall_ms));
        return py::make_tuple(result.pass, rows);
      },
      py::arg("name"), py::arg("seed") = 1);

  m.def("suite_names", [] { return suites::suite_names(); });
}
