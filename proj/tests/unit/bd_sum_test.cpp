#include <gtest/gtest.h>

#include <stdexcept>

#include "dedekind/bd_sum.hpp"
#include "dedekind/bernoulli.hpp"
#include "generators.hpp"

namespace dedekind {
namespace {

BDSumSpec spec(std::vector<long> a, std::vector<Rational> x, std::size_t k, std::vector<int> p) {
  return BDSumSpec{std::move(a), std::move(x), k, std::move(p)};
}

TEST(BDSum, ReducesToClassicalDedekindSum) {
  EXPECT_EQ(bd_sum(spec({2, 1, 3}, {0, 0, 0}, 2, {1, 1})), Rational(-1, 18));
  for (long a = 1; a <= 15; ++a) {
    for (long b = 1; b <= 15; ++b) {
      EXPECT_EQ(bd_sum(spec({a, 1, b}, {0, 0, 0}, 2, {1, 1})), dedekind_sum_bruteforce(a, b));
    }
  }
}

TEST(BDSum, FrozenValue) {
  const auto s = spec({2, 3, 5}, {Rational(1, 7), Rational(2, 7), Rational(3, 7)}, 0, {2, 2});
  EXPECT_EQ(bd_sum(s), Rational(5597, 345744));
  EXPECT_EQ(bd_sum_full_residue(s), Rational(5597, 5186160));
  EXPECT_EQ(full_residue_scale(s), Rational(1, 15));
}

TEST(BDSum, Validation) {
  EXPECT_THROW(bd_sum(spec({2}, {0}, 0, {})), std::invalid_argument);
  EXPECT_THROW(bd_sum(spec({2, 3}, {0, 0}, 2, {1})), std::invalid_argument);
  EXPECT_THROW(bd_sum(spec({2, 0}, {0, 0}, 0, {1})), std::invalid_argument);
  EXPECT_THROW(bd_sum(spec({2, 3}, {0, 0}, 0, {-1})), std::invalid_argument);
  EXPECT_THROW(bd_sum(spec({2, 3}, {0}, 0, {1})), std::invalid_argument);
  EXPECT_THROW(bd_sum(spec({2, 3}, {0, 0}, 0, {1, 1})), std::invalid_argument);
}

TEST(BDSum, TwoTermsIsBernoulliSumOverOneModulus) {
  // n = 2: sum_{h mod a_k} Bbar_p(a_j (h + x_k)/a_k - x_j).
  testing::Gen gen(31);
  for (int i = 0; i < 50; ++i) {
    const long a0 = gen.integer(1, 9);
    const long a1 = gen.integer(1, 9);
    const auto x = gen.shifts(2, 7);
    const int p = static_cast<int>(gen.integer(0, 5));
    Rational expected;
    for (long h = 0; h < a1; ++h) {
      expected += periodized_bernoulli(p, Rational(a0) * (Rational(h) + x[1]) / Rational(a1) - x[0]);
    }
    EXPECT_EQ(bd_sum(spec({a0, a1}, x, 1, {p})), expected);
  }
}

TEST(BDSum, ShiftInvarianceInDistinguishedShift) {
  // x_k -> x_k + 1 permutes the residues h mod a_k.
  testing::Gen gen(32);
  for (int i = 0; i < 40; ++i) {
    const auto a = gen.coprime_moduli(3, 7);
    auto x = gen.shifts(3, 9);
    const std::vector<int> p{static_cast<int>(gen.integer(0, 3)), static_cast<int>(gen.integer(0, 3))};
    const auto base = bd_sum(spec(a, x, 1, p));
    x[1] += 1;
    EXPECT_EQ(bd_sum(spec(a, x, 1, p)), base);
  }
}

TEST(BDSum, FullResidueRelation) {
  testing::Gen gen(33);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = gen.integer(2, 4);
    const auto a = gen.coprime_moduli(n, 6);
    const auto x = gen.shifts(n, 8);
    const std::size_t k = gen.integer(0, static_cast<long>(n) - 1);
    std::vector<int> p(n - 1);
    for (auto& v : p) v = static_cast<int>(gen.integer(0, 3));
    const auto s = spec(a, x, k, p);
    ASSERT_EQ(bd_sum_full_residue(s), bd_sum(s) * full_residue_scale(s));
  }
}

TEST(BDSum, PairwiseCoprime) {
  EXPECT_TRUE(pairwise_coprime(std::vector<long>{2, 3, 5}));
  EXPECT_TRUE(pairwise_coprime(std::vector<long>{1, 1, 1}));
  EXPECT_FALSE(pairwise_coprime(std::vector<long>{2, 3, 4}));
  EXPECT_TRUE(pairwise_coprime(std::vector<long>{7}));
}

TEST(Genericity, Examples) {
  const std::vector<long> a{2, 3, 5};
  EXPECT_FALSE(genericity_check(a, std::vector<Rational>{0, 0, 0}));
  EXPECT_TRUE(genericity_check(a, std::vector<Rational>{Rational(1, 7), Rational(2, 7), Rational(3, 7)}));
  EXPECT_THROW(genericity_check(std::vector<long>{2, 4}, std::vector<Rational>{0, 0}), std::domain_error);
  EXPECT_THROW(genericity_check(a, std::vector<Rational>{0, 0}), std::invalid_argument);
}

TEST(Genericity, ShortcutMatchesScan) {
  testing::Gen gen(34);
  int generic = 0;
  for (int i = 0; i < 400; ++i) {
    const std::size_t n = gen.integer(2, 4);
    const auto a = gen.coprime_moduli(n, 7);
    const auto x = gen.shifts(n, 6);
    const bool scan = genericity_check(a, x);
    ASSERT_EQ(genericity_shortcut(a, x), scan);
    generic += scan;
  }
  EXPECT_GT(generic, 0);
  EXPECT_LT(generic, 400);
}

TEST(EmbedLegacy, AgreesWithDirectSums) {
  testing::Gen gen(35);
  for (int i = 0; i < 60; ++i) {
    const long a = gen.integer(1, 9);
    const long b = gen.integer(1, 9);
    const long c = gen.integer(1, 9);
    const int m = static_cast<int>(gen.integer(0, 4));
    const int n = static_cast<int>(gen.integer(0, 4));
    const Rational x = gen.rational(6, 0, 1);
    const Rational y = gen.rational(6, 0, 1);
    const Rational z = gen.rational(6, 0, 1);
    const LegacySumParams all[] = {
        ApostolParams{a, b, n},
        CarlitzMikolasParams{a, b, c, m, n},
        DedekindRademacherParams{a, b, x, y},
        TakacsParams{a, b, n, x, y},
        HallWilsonZagierParams{a, b, c, m, n, x, y, z},
    };
    for (const auto& params : all) {
      ASSERT_EQ(bd_sum(embed_legacy(params)), legacy_sum(params)) << kind_name(params);
    }
  }
}

}  // namespace
}  // namespace dedekind
