#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "freehyper/report.hpp"

namespace freehyper::suites {

struct SuiteResult {
  std::string name;
  bool pass = true;
  std::vector<report::CheckRecord> records;

  void absorb(const report::CheckRecord& r) {
    pass = pass && r.pass;
    records.push_back(r);
  }
};

/// The numbered acceptance suites (1..13). Each returns one or more check
/// records; the suite passes iff every record does.
SuiteResult run_criterion(int index, std::uint64_t seed);

int criterion_count();
std::string criterion_name(int index);

/// Named entry points for the CLI: each criterion by name, plus "all".
std::vector<std::string> suite_names();
SuiteResult run_named(const std::string& name, std::uint64_t seed);

}  // namespace freehyper::suites
