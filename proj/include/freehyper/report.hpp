#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace freehyper::report {

/// One check outcome. `params` holds a JSON object string describing the
/// inputs (word, p, q, t, ...), echoed verbatim into the reports.
struct CheckRecord {
  std::string check;
  std::string params = "{}";
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::uint64_t seed = 0;
  double wall_ms = 0.0;
};

/// Column order: check, params, lhs, rhs, margin, tol, pass, seed, wall_ms.
std::string to_csv(const std::vector<CheckRecord>& records);
std::string to_json(const std::vector<CheckRecord>& records);

void write_file(const std::string& path, const std::string& content);

/// Worker count for parallel loops: the FREEHYPER_THREADS environment
/// variable when set, otherwise the configured default (initially 1).
int thread_count();
void set_default_threads(int n);

/// Runs fn(i) for i in [0, count) on thread_count() workers. Results must be
/// written to per-index slots; the partition of indices is deterministic.
void parallel_for(int count, const std::function<void(int)>& fn);

}  // namespace freehyper::report
