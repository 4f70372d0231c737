#include <gtest/gtest.h>

#include <stdexcept>

#include "dedekind/bernoulli.hpp"
#include "dedekind/classical_sums.hpp"
#include "dedekind/petersson_knopp.hpp"
#include "generators.hpp"

namespace dedekind {
namespace {

using R = Rational;

DedekindTypeSpec spec(long a, std::vector<long> mult, std::vector<int> idx) {
  return DedekindTypeSpec{a, std::move(mult), std::move(idx)};
}

TEST(DivisorSigma, Examples) {
  EXPECT_EQ(divisor_sigma(1, 6), R(12));
  EXPECT_EQ(divisor_sigma(0, 4), R(3));
  EXPECT_EQ(divisor_sigma(-1, 4), R(7, 4));
  EXPECT_EQ(divisor_sigma(2, 1), R(1));
  EXPECT_THROW(divisor_sigma(1, 0), std::invalid_argument);
}

TEST(PkClassical, Examples) {
  const auto r1 = pk_classical_check(3, 1, 1);
  EXPECT_TRUE(r1.passed());
  EXPECT_EQ(std::get<std::string>(r1.lhs), "1/18");
  const auto r2 = pk_classical_check(3, 1, 2);
  EXPECT_TRUE(r2.passed());
  EXPECT_EQ(std::get<std::string>(r2.lhs), "1/6");
  EXPECT_EQ(std::get<std::string>(r2.rhs), "1/6");
  EXPECT_TRUE(pk_classical_check(5, 2, 6).passed());
  const auto r3 = pk_classical_check(7, 2, 6);
  EXPECT_EQ(std::get<std::string>(r3.lhs), "6/7");
}

TEST(PkClassical, Grid) {
  for (long a = 1; a <= 12; ++a) {
    for (long b = 1; b <= 12; ++b) {
      if (gcd(a, b) != 1) continue;
      for (long m = 1; m <= 12; ++m) ASSERT_TRUE(pk_classical_check(a, b, m).passed()) << a << b << m;
    }
  }
}

TEST(DedekindTypeSum, Examples) {
  EXPECT_EQ(dedekind_type_sum(spec(3, {2, 1}, {1, 1})), R(-1, 18));
  EXPECT_EQ(dedekind_type_sum(spec(7, {3}, {1})), R(0));
  EXPECT_EQ(dedekind_type_sum(spec(2, {1, 1}, {2, 2})), R(5, 144));
  for (long a = 1; a <= 15; ++a) {
    for (long b = 1; b <= 15; ++b) EXPECT_EQ(dedekind_type_sum(spec(a, {b, 1}, {1, 1})), dedekind_sum_bruteforce(b, a));
  }
}

TEST(DedekindTypeSum, Validation) {
  EXPECT_THROW(dedekind_type_sum(spec(0, {1}, {1})), std::invalid_argument);
  EXPECT_THROW(dedekind_type_sum(spec(3, {}, {})), std::invalid_argument);
  EXPECT_THROW(dedekind_type_sum(spec(3, {1, 2}, {1})), std::invalid_argument);
  EXPECT_THROW(dedekind_type_sum(spec(3, {1}, {-1})), std::invalid_argument);
  EXPECT_THROW(dedekind_type_sum(spec(3, {0}, {1})), std::invalid_argument);
}

TEST(DedekindTypeSum, CustomComponentPlugsIn) {
  // A constant function has weight 1: sum_{k mod a} c = a * c.
  const DedekindTypeFunction one{[](const R&) { return R(1); }, 1};
  EXPECT_TRUE(weight_condition_check(one, 5, R(1, 3)).passed());
  const std::vector<long> mult{1};
  const std::vector<DedekindTypeFunction> fns{one};
  EXPECT_EQ(dedekind_type_sum(4, mult, fns), R(4));
}

TEST(WeightCondition, BernoulliComponents) {
  testing::Gen gen(71);
  for (int p = 0; p <= 8; ++p) {
    const auto fn = bernoulli_component(p);
    EXPECT_EQ(fn.weight, 1 - p);
    for (long a = 1; a <= 8; ++a) {
      for (int i = 0; i < 20; ++i) ASSERT_TRUE(weight_condition_check(fn, a, gen.rational(15)).passed());
    }
  }
}

TEST(WeightCondition, WrongWeightFails) {
  auto fn = bernoulli_component(2);
  fn.weight = 0;
  EXPECT_EQ(weight_condition_check(fn, 3, R(1, 5)).status, Status::fail);
}

TEST(PkGeneral, TrivialMultiplier) {
  testing::Gen gen(72);
  for (int i = 0; i < 20; ++i) {
    const auto s = spec(gen.integer(1, 5), {gen.integer(1, 5), gen.integer(1, 5)},
                        {static_cast<int>(gen.integer(0, 3)), static_cast<int>(gen.integer(0, 3))});
    EXPECT_TRUE(pk_general_check(s, 1, PkVariant::theorem).passed());
    EXPECT_TRUE(pk_general_check(s, 1, PkVariant::corollary).passed());
  }
}

TEST(PkGeneral, SpecExample) {
  const auto r = pk_general_check(spec(3, {2, 1}, {1, 1}), 2, PkVariant::theorem);
  EXPECT_TRUE(r.passed());
}

// Regression: the variant obtained by substituting the weights into the
// general identity is the one that holds; the shifted exponents do not.
TEST(PkGeneral, PinnedVariantHoldsOnGrid) {
  static_assert(kPinnedPkVariant == PkVariant::theorem);
  int theorem_pass = 0;
  int corollary_pass = 0;
  int cells = 0;
  for (long m = 1; m <= 6; ++m) {
    for (long a = 1; a <= 4; ++a) {
      for (int n = 1; n <= 2; ++n) {
        std::vector<long> mult(n, 1);
        std::vector<int> idx(n, 0);
        const auto each_mult = [&](auto&& self, int pos) -> void {
          if (pos == n) {
            const auto each_idx = [&](auto&& self2, int q) -> void {
              if (q == n) {
                const auto s = spec(a, mult, idx);
                ++cells;
                theorem_pass += pk_general_check(s, m, PkVariant::theorem).passed();
                corollary_pass += pk_general_check(s, m, PkVariant::corollary).passed();
                return;
              }
              for (int p = 0; p <= 3; ++p) {
                idx[q] = p;
                self2(self2, q + 1);
              }
            };
            each_idx(each_idx, 0);
            return;
          }
          for (long v = 1; v <= 4; ++v) {
            mult[pos] = v;
            self(self, pos + 1);
          }
        };
        each_mult(each_mult, 0);
      }
    }
  }
  EXPECT_EQ(theorem_pass, cells);
  EXPECT_LT(corollary_pass, cells);
}

}  // namespace
}  // namespace dedekind
