#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <random>

#include "dedekind/classical_sums.hpp"
#include "dedekind_cli/cli.hpp"

namespace dedekind::cli {

namespace {

constexpr long kBruteForceLimit = 10'000'000;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

double percentile(std::vector<double> v, double q) {
  std::sort(v.begin(), v.end());
  const auto idx = static_cast<std::size_t>(q * static_cast<double>(v.size() - 1) + 0.5);
  return v[std::min(idx, v.size() - 1)];
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

// Random coprime pair with b of exactly `bits` bits and 1 <= a < b.
std::pair<Integer, Integer> coprime_pair(gmp_randclass& rng, int bits) {
  while (true) {
    Integer b = rng.get_z_bits(bits);
    mpz_setbit(b.get_mpz_t(), static_cast<mp_bitcnt_t>(bits - 1));
    if (b < 2) continue;
    Integer a = rng.get_z_range(b - 1) + 1;
    if (gcd(a, b) == 1) return {a, b};
  }
}

}  // namespace

int run_bench(const BenchConfig& config, std::ostream& out) {
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(static_cast<unsigned long>(config.seed));

  if (!config.json) out << "bits  samples  fast_median_ms  fast_p90_ms  brute_median_ms\n";
  for (int bits : config.bits) {
    if (bits < 2 || bits > 8192) throw UsageError("--bits entries must be in 2..8192");
    std::vector<double> fast_ms;
    std::vector<double> brute_ms;
    bool brute_feasible = true;
    for (int s = 0; s < config.samples; ++s) {
      const auto [a, b] = coprime_pair(rng, bits);
      auto start = Clock::now();
      const Rational fast = dedekind_sum_fast(a, b);
      fast_ms.push_back(ms_since(start));
      if (b > kBruteForceLimit) {
        brute_feasible = false;
        continue;
      }
      start = Clock::now();
      const Rational brute = dedekind_sum_bruteforce(a.get_si(), b.get_si());
      brute_ms.push_back(ms_since(start));
      if (brute != fast) throw std::logic_error("fast and brute-force evaluators disagree");
    }
    const double med = percentile(fast_ms, 0.5);
    const double p90 = percentile(fast_ms, 0.9);
    const std::string brute_text =
        brute_feasible ? fixed(percentile(brute_ms, 0.5)) : "infeasible (b > 1e7)";
    if (config.json) {
      VerificationReport r;
      r.identity = "bench";
      r.status = Status::reported_only;
      r.add_input("bits", std::to_string(bits));
      r.add_input("samples", std::to_string(config.samples));
      r.detail = brute_feasible ? "bruteforce median " + brute_text + " ms" : "bruteforce " + brute_text;
      r.elapsed_ms = med;
      auto j = to_json(r);
      j["metrics"] = {{"fast_median_ms", med}, {"fast_p90_ms", p90}};
      if (brute_feasible) j["metrics"]["brute_median_ms"] = percentile(brute_ms, 0.5);
      out << j.dump() << '\n';
    } else {
      out << bits << "  " << config.samples << "  " << fixed(med) << "  " << fixed(p90) << "  "
          << brute_text << '\n';
    }
  }

  // Agreement spot check on small moduli.
  VerificationReport check;
  check.identity = "bench-agreement";
  {
    ReportTimer timer(check);
    std::mt19937_64 small(config.seed);
    std::uniform_int_distribution<long> bdist(1, 300);
    int checked = 0;
    while (checked < 200) {
      const long b = bdist(small);
      const long a = std::uniform_int_distribution<long>(1, b)(small);
      if (gcd(a, b) != 1) continue;
      ++checked;
      const Rational fast = dedekind_sum_fast(Integer(a), Integer(b));
      const Rational brute = dedekind_sum_bruteforce(a, b);
      if (fast != brute) {
        check.fail("s(" + std::to_string(a) + "," + std::to_string(b) + "): fast " + fast.str() +
                   ", brute force " + brute.str());
        break;
      }
    }
    check.add_input("pairs", std::to_string(checked));
    check.add_input("bmax", "300");
  }
  if (check.passed()) check.detail = "fast and brute-force evaluators agree";
  out << (config.json ? to_json(check).dump() + "\n" : to_text(check));
  return check.passed() ? kExitOk : kExitIdentityFailure;
}

}  // namespace dedekind::cli
