#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <string>
#include <vector>

#include <json.hpp>

#include "freehyper/report.hpp"

using namespace freehyper::report;

namespace {

std::vector<CheckRecord> sample_records() {
  CheckRecord a;
  a.check = "alpha";
  a.params = "{\"p\":1.5,\"word\":\"z1,z2\"}";
  a.lhs = 1.25;
  a.rhs = 1.5;
  a.margin = -0.25;
  a.tol = 1e-9;
  a.pass = true;
  a.seed = 7;
  a.wall_ms = 12.5;
  CheckRecord b;
  b.check = "beta";
  b.pass = false;
  return {a, b};
}

}  // namespace

TEST_CASE("CSV keeps the documented column order and quotes params") {
  const std::string csv = to_csv(sample_records());
  CHECK(csv.rfind("check,params,lhs,rhs,margin,tol,pass,seed,wall_ms\n", 0) == 0);
  CHECK(csv.find("\"alpha\"") != std::string::npos);
  // Embedded quotes in the params JSON are doubled per RFC 4180.
  CHECK(csv.find("\"\"p\"\"") != std::string::npos);
  CHECK(csv.find(",true,7,") != std::string::npos);
  CHECK(csv.find(",false,0,") != std::string::npos);
}

TEST_CASE("JSON report parses back with structured params") {
  const nlohmann::json doc = nlohmann::json::parse(to_json(sample_records()));
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 2);
  CHECK(doc[0]["check"] == "alpha");
  CHECK(doc[0]["params"]["p"] == 1.5);
  CHECK(doc[0]["lhs"] == 1.25);
  CHECK(doc[0]["pass"] == true);
  CHECK(doc[0]["seed"] == 7);
  CHECK(doc[1]["check"] == "beta");
  CHECK(doc[1]["pass"] == false);
}

TEST_CASE("serialization is deterministic for identical inputs") {
  CHECK(to_csv(sample_records()) == to_csv(sample_records()));
  CHECK(to_json(sample_records()) == to_json(sample_records()));
}

TEST_CASE("thread count prefers the environment variable") {
  set_default_threads(3);
  CHECK(thread_count() == 3);
  setenv("FREEHYPER_THREADS", "5", 1);
  CHECK(thread_count() == 5);
  unsetenv("FREEHYPER_THREADS");
  CHECK(thread_count() == 3);
  set_default_threads(1);
}

TEST_CASE("parallel_for covers every index exactly once") {
  set_default_threads(4);
  const int count = 1000;
  std::vector<std::atomic<int>> hits(count);
  parallel_for(count, [&](int i) { hits[i].fetch_add(1); });
  for (int i = 0; i < count; ++i) CHECK(hits[i].load() == 1);
  set_default_threads(1);
}
