#include <gtest/gtest.h>

#include <stdexcept>

#include "dedekind/sign_matrix.hpp"
#include "generators.hpp"

namespace dedekind {
namespace {

using R = Rational;

ResidueVector example() { return ResidueVector({R(1, 10), R(2, 5), R(7, 10)}); }

// Random residues with no integral pairwise difference.
ResidueVector random_residues(testing::Gen& gen, std::size_t n) {
  while (true) {
    std::vector<R> r(n);
    for (auto& v : r) v = gen.rational(29, -2, 2);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = i + 1; j < n && ok; ++j) ok = !(r[i] - r[j]).is_integer();
    }
    if (ok) return ResidueVector(std::move(r));
  }
}

TEST(ResidueVector, RejectsIntegralDifferences) {
  EXPECT_THROW(ResidueVector({R(1, 3), R(4, 3)}), std::domain_error);
  const std::vector<long> a{2, 3};
  const std::vector<R> x{R(1, 7), R(2, 7)};
  const std::vector<long> h{1, 2};
  const auto r = ResidueVector::from_shifts(a, x, h);
  EXPECT_EQ(r[0], R(4, 7));
  EXPECT_EQ(r[1], R(16, 21));
}

TEST(Sigma, Examples) {
  const auto r = example();
  EXPECT_EQ(sigma(0, 1, r), Sign::plus);
  EXPECT_EQ(sigma(1, 0, r), Sign::minus);
  EXPECT_THROW(sigma(0, 0, r), std::invalid_argument);
  EXPECT_THROW(sigma(0, 2, r), std::invalid_argument);
}

TEST(BuildMatrices, ThreeResidueExample) {
  const auto m = build_matrices(example());
  EXPECT_EQ(m.pos.row_str(0), "++");
  EXPECT_EQ(m.pos.row_str(1), "-+");
  EXPECT_EQ(m.pos.row_str(2), "--");
  EXPECT_EQ(m.neg.row_str(0), "-+");
  EXPECT_EQ(m.neg.row_str(1), "--");
  EXPECT_EQ(m.neg.row_str(2), "++");
}

TEST(BuildMatrices, TwoResidues) {
  const auto m = build_matrices(ResidueVector({R(1, 3), R(1, 2)}));
  EXPECT_EQ(m.pos.row_str(0), "+");
  EXPECT_EQ(m.pos.row_str(1), "-");
  EXPECT_EQ(m.neg.row_str(0), "-");
  EXPECT_EQ(m.neg.row_str(1), "+");
  EXPECT_TRUE(verify_sign_lemmas(m).passed());
}

TEST(SignLemmas, Example) {
  const auto report = verify_sign_lemmas(example());
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.identity, "sign-lemmas");
}

TEST(SignLemmas, RandomResidues) {
  testing::Gen gen(61);
  for (std::size_t n = 3; n <= 8; ++n) {
    for (int i = 0; i < 500; ++i) {
      const auto r = random_residues(gen, n);
      const auto report = verify_sign_lemmas(r);
      ASSERT_TRUE(report.passed()) << report.witnesses.front();
      ASSERT_TRUE(exponent_bookkeeping_check(r).passed());
    }
  }
}

TEST(SignLemmas, CorruptedMatrixIsReported) {
  testing::Gen gen(62);
  for (std::size_t n = 3; n <= 6; ++n) {
    for (int i = 0; i < 20; ++i) {
      auto m = build_matrices(random_residues(gen, n));
      const std::size_t row = gen.integer(0, static_cast<long>(n) - 2);
      std::size_t col = gen.integer(0, static_cast<long>(n) - 3);
      if (col >= row) ++col;
      m.pos.at(row, col) = flip(m.pos.at(row, col));
      m.neg.at(row, col) = flip(m.neg.at(row, col));
      const auto report = verify_sign_lemmas(m);
      ASSERT_EQ(report.status, Status::fail);
      ASSERT_FALSE(report.witnesses.empty());
    }
  }
}

TEST(SignLemmas, StructuralCorruptionIsReported) {
  auto m = build_matrices(example());
  m.pos.at(2, 0) = Sign::plus;
  const auto report = verify_sign_lemmas(m);
  EXPECT_EQ(report.status, Status::fail);
  EXPECT_NE(report.witnesses.front().find("structure"), std::string::npos);
}

TEST(Numerator, Examples) {
  EXPECT_LT(numerator_check(example(), std::vector<double>{0.2, 0.3, -0.5}), 1e-12);
  testing::Gen gen(63);
  for (int i = 0; i < 100; ++i) {
    const auto r = random_residues(gen, 5);
    const auto y = gen.zero_sum(5);
    EXPECT_LT(numerator_check(r, y), 1e-9);
    std::vector<double> big(y);
    for (auto& v : big) v *= 10.0;
    double s = 0.0;
    for (std::size_t j = 0; j + 1 < big.size(); ++j) s += big[j];
    big.back() = -s;
    EXPECT_LT(numerator_check(r, big), 1e-6);
  }
}

TEST(Numerator, Preconditions) {
  EXPECT_THROW(numerator_check(example(), std::vector<double>{0.2, 0.3, -0.4}), std::invalid_argument);
  EXPECT_THROW(numerator_check(example(), std::vector<double>{0.0, 0.3, -0.3}), std::invalid_argument);
  EXPECT_THROW(numerator_check(example(), std::vector<double>{0.5, -0.5}), std::invalid_argument);
}

TEST(Numerator, ExponentMultisetsAgree) {
  testing::Gen gen(64);
  for (int i = 0; i < 100; ++i) {
    const auto r = random_residues(gen, static_cast<std::size_t>(gen.integer(2, 7)));
    auto e = numerator_exponents(r);
    std::sort(e.positive.begin(), e.positive.end());
    std::sort(e.negative.begin(), e.negative.end());
    ASSERT_EQ(e.positive, e.negative);
  }
}

}  // namespace
}  // namespace dedekind
