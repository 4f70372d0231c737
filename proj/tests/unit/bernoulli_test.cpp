#include <gtest/gtest.h>

#include <thread>
#include <vector>

#include "dedekind/bernoulli.hpp"
#include "dedekind/sign_matrix.hpp"
#include "generators.hpp"

namespace dedekind {
namespace {

// Bernoulli numbers from the power-series inverse of (e^z - 1)/z, which is
// independent of the recurrence used by the library.
std::vector<Rational> bernoulli_by_series_inversion(int n) {
  std::vector<Rational> a(n + 1);
  Rational fact(1);
  for (int k = 0; k <= n; ++k) {
    fact *= Rational(k + 1);
    a[k] = Rational(1) / fact;  // 1/(k+1)!
  }
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational acc;
    for (int k = 1; k <= m; ++k) acc += a[k] * b[m - k];
    b[m] = -acc;
  }
  Rational f(1);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) f *= Rational(k);
    b[k] *= f;
  }
  return b;
}

TEST(BernoulliNumber, SpecExamples) {
  EXPECT_EQ(bernoulli_number(0), Rational(1));
  EXPECT_EQ(bernoulli_number(1), Rational(-1, 2));
  EXPECT_EQ(bernoulli_number(3), Rational(0));
}

TEST(BernoulliNumber, MatchesSeriesInversionOracle) {
  const auto oracle = bernoulli_by_series_inversion(30);
  for (int k = 0; k <= 30; ++k) EXPECT_EQ(bernoulli_number(k), oracle[k]) << "k=" << k;
}

TEST(BernoulliNumber, FrozenValues) {
  EXPECT_EQ(bernoulli_number(12), Rational(-691, 2730));
  EXPECT_EQ(bernoulli_number(20), Rational(-174611, 330));
}

TEST(BernoulliNumber, OddVanish) {
  for (int k = 1; k <= 10; ++k) EXPECT_TRUE(bernoulli_number(2 * k + 1).is_zero());
}

TEST(BernoulliNumber, NegativeIndexThrows) {
  EXPECT_THROW(bernoulli_number(-1), std::invalid_argument);
  EXPECT_THROW(periodized_bernoulli(-2, Rational(1, 3)), std::invalid_argument);
}

TEST(BernoulliNumber, ConcurrentFirstUse) {
  std::vector<std::thread> threads;
  std::vector<Rational> results(8);
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([t, &results] { results[t] = bernoulli_number(40 + t % 2 * 2); });
  }
  for (auto& th : threads) th.join();
  const auto oracle = bernoulli_by_series_inversion(42);
  for (int t = 0; t < 8; ++t) EXPECT_EQ(results[t], oracle[40 + t % 2 * 2]);
}

TEST(BernoulliPoly, SpecExamples) {
  EXPECT_EQ(bernoulli_poly(0).coeffs, std::vector<Rational>{1});
  EXPECT_EQ(bernoulli_poly(1).coeffs, (std::vector<Rational>{Rational(-1, 2), 1}));
  EXPECT_EQ(bernoulli_poly(2).coeffs, (std::vector<Rational>{Rational(1, 6), -1, 1}));
}

TEST(BernoulliPoly, MonicAndDerivativeRelation) {
  for (int k = 1; k <= 20; ++k) {
    const auto& p = bernoulli_poly(k);
    const auto& q = bernoulli_poly(k - 1);
    ASSERT_EQ(p.degree, k);
    EXPECT_EQ(p.coeffs.back(), Rational(1));
    // B_k'(u) = k B_{k-1}(u)
    for (int j = 1; j <= k; ++j) EXPECT_EQ(Rational(j) * p.coeffs[j], Rational(k) * q.coeffs[j - 1]);
  }
}

TEST(BernoulliPoly, ForwardDifference) {
  // B_k(u + 1) - B_k(u) = k u^{k-1}
  testing::Gen gen(5);
  for (int k = 1; k <= 12; ++k) {
    const Rational u = gen.rational(17);
    EXPECT_EQ(bernoulli_poly(k)(u + 1) - bernoulli_poly(k)(u), Rational(k) * u.pow(k - 1));
  }
}

TEST(PeriodizedBernoulli, SpecExamples) {
  EXPECT_EQ(periodized_bernoulli(1, Rational(7, 2)), Rational(0));
  EXPECT_EQ(periodized_bernoulli(1, Rational(4)), Rational(0));
  EXPECT_EQ(periodized_bernoulli(2, Rational(-1, 3)), Rational(-1, 18));
}

TEST(PeriodizedBernoulli, IntegerArgumentsUseBernoulliNumbersExceptB1) {
  for (int k = 0; k <= 10; ++k) {
    const Rational expected = k == 1 ? Rational(0) : bernoulli_number(k);
    EXPECT_EQ(periodized_bernoulli(k, Rational(-3)), expected);
  }
}

TEST(PeriodizedBernoulli, PeriodOne) {
  testing::Gen gen(1);
  for (int i = 0; i < 200; ++i) {
    const Rational u = gen.rational(50, -10, 10);
    for (int k = 0; k <= 20; ++k) {
      ASSERT_EQ(periodized_bernoulli(k, u + 1), periodized_bernoulli(k, u)) << k << " " << u;
    }
  }
}

TEST(Sawtooth, SpecExamples) {
  EXPECT_EQ(sawtooth(Rational(5)), Rational(0));
  EXPECT_EQ(sawtooth(Rational(1, 4)), Rational(-1, 4));
  EXPECT_EQ(sawtooth(Rational(-1, 3)), Rational(1, 6));
}

TEST(Sawtooth, EqualsFirstPeriodizedBernoulli) {
  testing::Gen gen(2);
  for (int i = 0; i < 300; ++i) {
    const Rational u = gen.rational(12, -5, 5);
    EXPECT_EQ(sawtooth(u), periodized_bernoulli(1, u));
  }
}

TEST(Raabe, SpecExamples) {
  const auto r1 = raabe_check(1, 4, Rational(2, 7));
  EXPECT_TRUE(r1.passed());
  const auto r2 = raabe_check(2, 2, Rational(0));
  EXPECT_TRUE(r2.passed());
  EXPECT_EQ(std::get<std::string>(r2.lhs), "1/12");
  EXPECT_EQ(std::get<std::string>(r2.rhs), "1/12");
  EXPECT_TRUE(raabe_check(3, 1, Rational(1, 2)).passed());
}

TEST(Raabe, Grid) {
  testing::Gen gen(3);
  for (int t = 0; t < 50; ++t) {
    const Rational x = gen.rational(30);
    for (long a = 1; a <= 12; ++a) {
      for (int m = 0; m <= 10; ++m) ASSERT_TRUE(raabe_check(a, m, x).passed()) << a << " " << m << " " << x;
    }
  }
}

TEST(FractionalDifferenceLemma, RandomTriples) {
  testing::Gen gen(4);
  for (int i = 0; i < 500; ++i) {
    const Rational a = gen.rational(20, -4, 4);
    const Rational b = gen.rational(20, -4, 4);
    const Rational c = gen.rational(20, -4, 4);
    EXPECT_TRUE(fractional_difference_lemma_holds(a, b, c)) << a << " " << b << " " << c;
  }
  // b = c mod 1 is the zero-difference corner.
  EXPECT_TRUE(fractional_difference_lemma_holds(Rational(1, 3), Rational(1, 5), Rational(6, 5)));
}

}  // namespace
}  // namespace dedekind
