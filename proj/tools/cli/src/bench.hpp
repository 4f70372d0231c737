#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace dedekind::cli {

struct BenchConfig {
  std::vector<int> bits{64, 128, 256, 512};
  int samples = 21;
  std::uint64_t seed = 42;
  bool json = false;
};

/// Times the fast evaluator per bit size, the brute-force evaluator where
/// b <= 1e7, and spot-checks agreement at b <= 300. Returns the exit code.
int run_bench(const BenchConfig& config, std::ostream& out);

}  // namespace dedekind::cli
