#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "dedekind/bd_sum.hpp"
#include "dedekind/series.hpp"
#include "dedekind_cli/cli.hpp"

namespace dedekind::cli {

void SweepConfig::validate() const {
  if (n < 2 || n > 8) throw UsageError("--n must be in 2..8");
  if (trials < 1) throw UsageError("--trials must be >= 1");
  if (amax < 1) throw UsageError("--amax must be >= 1");
  if (xden < 2) throw UsageError("--xden must be >= 2");
  if (degree < 0) throw UsageError("--degree must be >= 0");
  if (parallelism < 1) throw UsageError("--parallel must be >= 1");
  // Distinct shifts mod 1 need enough room when all moduli are 1.
  if (static_cast<long>(n) > xden * (xden + 1) / 2) throw UsageError("--xden too small for --n");
}

std::vector<SweepInstance> generate_sweep_instances(const SweepConfig& config) {
  config.validate();
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<long> modulus(1, config.amax);
  std::uniform_int_distribution<long> den_dist(1, config.xden);

  std::vector<SweepInstance> out;
  out.reserve(config.trials);
  for (std::size_t t = 0; t < config.trials; ++t) {
    SweepInstance inst;
    inst.a.resize(config.n);
    do {
      for (auto& v : inst.a) v = modulus(rng);
    } while (!pairwise_coprime(inst.a));
    inst.x.resize(config.n);
    do {
      for (auto& v : inst.x) {
        const long den = den_dist(rng);
        v = Rational(std::uniform_int_distribution<long>(0, den - 1)(rng), den);
      }
    } while (!genericity_check(inst.a, inst.x));
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<VerificationReport> run_sweep(const SweepConfig& config) {
  const auto instances = generate_sweep_instances(config);
  std::vector<VerificationReport> reports(instances.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      reports[i] = reciprocity_check(instances[i].a, instances[i].x, config.degree);
      reports[i].inputs.insert(reports[i].inputs.begin(), {"trial", std::to_string(i + 1)});
    }
  };
  const unsigned threads =
      std::min<unsigned>(config.parallelism, static_cast<unsigned>(instances.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return reports;
}

}  // namespace dedekind::cli
