#include "freehyper/report.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include <json.hpp>

namespace freehyper::report {

namespace {

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_csv(const std::vector<CheckRecord>& records) {
  std::ostringstream os;
  os.precision(17);
  os << "check,params,lhs,rhs,margin,tol,pass,seed,wall_ms\n";
  for (const auto& r : records)
    os << csv_quote(r.check) << ',' << csv_quote(r.params) << ',' << r.lhs << ','
       << r.rhs << ',' << r.margin << ',' << r.tol << ','
       << (r.pass ? "true" : "false") << ',' << r.seed << ',' << r.wall_ms << '\n';
  return os.str();
}

std::string to_json(const std::vector<CheckRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json row;
    row["check"] = r.check;
    row["params"] = nlohmann::json::parse(r.params);
    row["lhs"] = r.lhs;
    row["rhs"] = r.rhs;
    row["margin"] = r.margin;
    row["tol"] = r.tol;
    row["pass"] = r.pass;
    row["seed"] = r.seed;
    row["wall_ms"] = r.wall_ms;
    arr.push_back(std::move(row));
  }
  return arr.dump(2);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

namespace {
std::atomic<int> default_threads{1};
}

void set_default_threads(int n) { default_threads.store(n >= 1 ? n : 1); }

int thread_count() {
  const char* env = std::getenv("FREEHYPER_THREADS");
  if (!env) return default_threads.load();
  const int n = std::atoi(env);
  return n >= 1 ? n : default_threads.load();
}

void parallel_for(int count, const std::function<void(int)>& fn) {
  const int workers = std::min(thread_count(), count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace freehyper::report
