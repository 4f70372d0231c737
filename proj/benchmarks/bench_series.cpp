#include <benchmark/benchmark.h>

#include "dedekind/series.hpp"
#include "dedekind/sign_matrix.hpp"

namespace {

using namespace dedekind;

const std::vector<long> kModuli{2, 3, 5, 7, 1};
const std::vector<Rational> kShifts{Rational(1, 13), Rational(2, 13), Rational(3, 13), Rational(4, 13),
                                    Rational(5, 13)};

void reciprocity(benchmark::State& state, OmegaPath path) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const int degree = static_cast<int>(state.range(1));
  const std::vector<long> a(kModuli.begin(), kModuli.begin() + static_cast<long>(n));
  const std::vector<Rational> x(kShifts.begin(), kShifts.begin() + static_cast<long>(n));
  for (auto _ : state) benchmark::DoNotOptimize(reciprocity_residual(a, x, degree, path));
}

void BM_ReciprocityPVectors(benchmark::State& state) { reciprocity(state, OmegaPath::p_vectors); }
void BM_ReciprocityHTuples(benchmark::State& state) { reciprocity(state, OmegaPath::h_tuples); }
BENCHMARK(BM_ReciprocityPVectors)->Args({3, 6})->Args({4, 6})->Args({5, 6})->Args({3, 10});
BENCHMARK(BM_ReciprocityHTuples)->Args({3, 6})->Args({4, 6});

void BM_PolyProduct(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  TruncatedMultiPoly p = TruncatedMultiPoly::constant(3, degree, Rational(1));
  for (std::size_t i = 0; i < 3; ++i) p += TruncatedMultiPoly::variable(3, degree, i);
  for (auto _ : state) {
    TruncatedMultiPoly q = p;
    for (int k = 0; k < degree; ++k) q = q * p;
    benchmark::DoNotOptimize(q);
  }
}
BENCHMARK(BM_PolyProduct)->Arg(4)->Arg(8);

void BM_SignLemmas(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<Rational> r;
  for (std::size_t i = 0; i < n; ++i) r.emplace_back(Integer(static_cast<long>(i * i + 1)), Integer(53));
  const ResidueVector residues(r);
  for (auto _ : state) benchmark::DoNotOptimize(verify_sign_lemmas(residues));
}
BENCHMARK(BM_SignLemmas)->Arg(4)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
