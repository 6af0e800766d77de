// Acceptance suite runner: executes one numbered criterion (or all of them)
// and prints a pass/fail line per check.  Exit code 0 when everything
// passed, 2 on any failure.

#include <cstdint>
#include <cstring>
#include <iostream>
#include <string>

#include "ginprod/verify.hpp"

int main(int argc, char** argv) {
  int criterion = 0;  // 0 = all
  std::uint64_t seed = 42;
  bool desk = false;
  int threads = 0;
  std::string artifacts;

  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    auto next = [&](const char* name) -> std::string {
      if (i + 1 >= argc) {
        std::cerr << name << " needs a value\n";
        std::exit(64);
      }
      return argv[++i];
    };
    if (arg == "--criterion") criterion = std::stoi(next("--criterion"));
    else if (arg == "--seed") seed = std::stoull(next("--seed"));
    else if (arg == "--threads") threads = std::stoi(next("--threads"));
    else if (arg == "--desk") desk = true;
    else if (arg == "--artifacts-dir") artifacts = next("--artifacts-dir");
    else {
      std::cerr << "unknown argument: " << arg << "\n";
      return 64;
    }
  }

  ginprod::verify::VerifyOptions opts;
  opts.full = true;
  opts.desk_scale = desk;
  opts.seed = seed;
  opts.threads = threads;
  opts.artifacts_dir = artifacts;

  int failed = 0, passed = 0;
  const int lo = criterion ? criterion : 1;
  const int hi = criterion ? criterion : ginprod::verify::kNumCriteria;
  for (int k = lo; k <= hi; ++k) {
    for (const auto& c : ginprod::verify::run_criterion(k, opts)) {
      (c.pass ? passed : failed)++;
      std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << "criterion " << k << ": " << c.name
                << " | expected: " << c.expected << " | obtained: " << c.obtained
                << " | tolerance: " << c.tolerance << "\n";
    }
  }
  std::cout << passed << "/" << passed + failed << " checks passed\n";
  return failed ? 2 : 0;
}
