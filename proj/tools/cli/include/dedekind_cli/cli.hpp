#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "dedekind/rational.hpp"
#include "dedekind/report.hpp"

namespace dedekind::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIdentityFailure = 1;
inline constexpr int kExitUsage = 2;

/// Bad command-line input. Maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Runs the tool with argv-style arguments (args[0] is the program name).
/// Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Parsing of comma-separated lists. Throw UsageError on malformed input.
long parse_long(const std::string& text);
std::vector<long> parse_long_list(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);
std::vector<Rational> parse_rational_list(const std::string& text);

/// One JSON object per report; exact values stay "p/q" strings.
nlohmann::ordered_json to_json(const VerificationReport& report);

/// Multi-line human-readable rendering.
std::string to_text(const VerificationReport& report);

/// "1/4*y1*y2^2 + 1/4*y1^2*y2" style rendering of a term list.
std::string render_terms(const std::vector<Term>& terms);

struct SweepConfig {
  std::size_t n = 3;
  std::size_t trials = 100;
  std::uint64_t seed = 42;
  long amax = 7;
  long xden = 13;
  int degree = 6;
  unsigned parallelism = 1;

  /// Throws UsageError on out-of-range values.
  void validate() const;
};

struct SweepInstance {
  std::vector<long> a;
  std::vector<Rational> x;
};

/// Pairwise coprime moduli in 1..amax and generic shifts with denominators
/// up to xden, both by rejection. The sequence depends only on the config.
std::vector<SweepInstance> generate_sweep_instances(const SweepConfig& config);

/// Runs the reciprocity check on every instance. Results are ordered by
/// instance index whatever the parallelism.
std::vector<VerificationReport> run_sweep(const SweepConfig& config);

}  // namespace dedekind::cli
