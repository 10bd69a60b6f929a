// Acceptance gate: one line per criterion, runtime limits included.
// Usage: acceptance [--criterion N]

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>

#include "tmpr/selftest.hpp"

namespace st = tmpr::selftest;

namespace {

// Runtime limits in seconds; 0 means none was stated.
constexpr double limits[11] = {0, 60, 0, 0, 0, 600, 60, 0, 0, 30, 0};

std::string all_lines(st::Options const& opt) {
  std::string out;
  for (auto const& r : st::run_all(opt)) out += st::format_line(r) + "\n";
  return out;
}

bool run(int criterion) {
  st::Options const opt;
  auto const start = std::chrono::steady_clock::now();
  st::SuiteResult r = st::suites()[criterion - 1](opt);
  std::string extra;
  if (criterion == 10) {
    // selftest as a whole must repeat byte for byte
    bool const same = all_lines(opt) == all_lines(opt);
    r.pass = r.pass && same;
    extra = same ? "  selftest_repeat=identical" : "  selftest_repeat=DIFFERENT";
  }
  double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool const in_time = limits[criterion] == 0 || secs < limits[criterion];
  bool const pass = r.pass && in_time;
  std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL") << "  " << st::format_line(r) << extra
            << "  time=" << secs << "s";
  if (limits[criterion] > 0) std::cout << " limit=" << limits[criterion] << "s";
  std::cout << std::endl;
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc == 3 && std::strcmp(argv[1], "--criterion") == 0) {
    int const c = std::atoi(argv[2]);
    if (c < 1 || c > 10) {
      std::cerr << "criterion must lie in [1, 10]\n";
      return 64;
    }
    return run(c) ? 0 : 1;
  }
  if (argc != 1) {
    std::cerr << "usage: acceptance [--criterion N]\n";
    return 64;
  }
  bool all = true;
  for (int c = 1; c <= 10; ++c) all = run(c) && all;
  return all ? 0 : 1;
}
