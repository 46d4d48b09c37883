// Acceptance driver: runs every numbered suite and prints one line per
// criterion. Exits nonzero when any criterion fails.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <thread>

#include "freehyper/report.hpp"
#include "freehyper/suites.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 5;
  // Capped so the memory-hungry group-power suites stay within small machines;
  // FREEHYPER_THREADS still overrides.
  freehyper::report::set_default_threads(
      std::clamp(static_cast<int>(std::thread::hardware_concurrency()), 1, 4));
  std::string out_path;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
      seed = std::strtoull(argv[++i], nullptr, 10);
    else if (std::strcmp(argv[i], "--out") == 0 && i + 1 < argc)
      out_path = argv[++i];
  }

  using namespace freehyper;
  int failed = 0;
  std::vector<report::CheckRecord> all_records;
  for (int i = 1; i <= suites::criterion_count(); ++i) {
    const suites::SuiteResult result = suites::run_criterion(i, seed);
    double wall = 0.0;
    for (const auto& r : result.records) wall += r.wall_ms;
    std::printf("[%2d/%d] %-16s %s  (%.0f ms)\n", i, suites::criterion_count(),
                result.name.c_str(), result.pass ? "PASS" : "FAIL", wall);
    if (!result.pass) {
      ++failed;
      for (const auto& r : result.records)
        if (!r.pass)
          std::printf("        failing check: %s margin=%.6g tol=%.6g params=%s\n",
                      r.check.c_str(), r.margin, r.tol, r.params.c_str());
    }
    std::fflush(stdout);
    for (const auto& r : result.records) all_records.push_back(r);
  }
  if (!out_path.empty()) report::write_file(out_path, report::to_json(all_records));
  std::printf("%d/%d criteria passed (seed %llu)\n",
              suites::criterion_count() - failed, suites::criterion_count(),
              static_cast<unsigned long long>(seed));
  return failed == 0 ? 0 : 1;
}
