#include <benchmark/benchmark.h>

#include "dedekind/bd_sum.hpp"
#include "dedekind/bernoulli.hpp"
#include "dedekind/classical_sums.hpp"

namespace {

using namespace dedekind;

std::pair<Integer, Integer> coprime_pair(gmp_randclass& rng, int bits) {
  while (true) {
    Integer b = rng.get_z_bits(bits);
    mpz_setbit(b.get_mpz_t(), static_cast<mp_bitcnt_t>(bits - 1));
    Integer a = rng.get_z_range(b - 1) + 1;
    if (gcd(a, b) == 1) return {a, b};
  }
}

void BM_DedekindSumFast(benchmark::State& state) {
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(static_cast<unsigned long>(state.range(0)));
  const auto [a, b] = coprime_pair(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dedekind_sum_fast(a, b));
}
BENCHMARK(BM_DedekindSumFast)->Arg(64)->Arg(128)->Arg(256)->Arg(512)->Arg(2048);

void BM_DedekindSumBruteForce(benchmark::State& state) {
  const long b = state.range(0);
  const long a = b / 3 + 1;
  for (auto _ : state) benchmark::DoNotOptimize(dedekind_sum_bruteforce(a, b));
}
BENCHMARK(BM_DedekindSumBruteForce)->Arg(101)->Arg(1009)->Arg(10007);

void BM_DedekindSumCotangent(benchmark::State& state) {
  const long b = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(dedekind_sum_cotangent(b / 3 + 1, b));
}
BENCHMARK(BM_DedekindSumCotangent)->Arg(101)->Arg(1009)->Arg(10007);

void BM_BernoulliPolyEval(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Rational u(7, 13);
  bernoulli_poly(k);
  for (auto _ : state) benchmark::DoNotOptimize(periodized_bernoulli(k, u));
}
BENCHMARK(BM_BernoulliPolyEval)->Arg(2)->Arg(8)->Arg(32);

void BM_BDSum(benchmark::State& state) {
  BDSumSpec s{{2, 3, 5, 7}, {Rational(1, 11), Rational(2, 11), Rational(3, 11), Rational(4, 11)}, 3, {2, 3, 1}};
  s.a[3] = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(bd_sum(s));
}
BENCHMARK(BM_BDSum)->Arg(7)->Arg(101)->Arg(1009);

}  // namespace
