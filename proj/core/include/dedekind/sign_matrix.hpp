#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dedekind/rational.hpp"
#include "dedekind/report.hpp"

namespace dedekind {

/// Residues r_j = (x_j + h_j)/a_j. All pairwise differences must be
/// non-integral; the constructor throws std::domain_error otherwise.
class ResidueVector {
 public:
  explicit ResidueVector(std::vector<Rational> r);
  static ResidueVector from_shifts(std::span<const long> a, std::span<const Rational> x,
                                   std::span<const long> h);

  std::size_t size() const { return r_.size(); }
  const Rational& operator[](std::size_t i) const { return r_[i]; }
  const std::vector<Rational>& values() const { return r_; }

 private:
  std::vector<Rational> r_;
};

enum class Sign : signed char { minus = -1, plus = 1 };

inline Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline char to_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

/// Dense rows x cols matrix of signs.
class SignMatrix {
 public:
  SignMatrix(std::size_t rows, std::size_t cols, Sign fill = Sign::plus)
      : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Sign& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  Sign at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  std::vector<Sign> row(std::size_t i) const;
  std::size_t plus_count(std::size_t i) const;
  std::string row_str(std::size_t i) const;

  friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Sign> entries_;
};

struct SignMatrices {
  SignMatrix pos;
  SignMatrix neg;
};

/// Sign of {r_i - r_j} - {r_i - r_last} for distinct i, j < n-1 (zero-based;
/// the last residue is the reference). Throws std::invalid_argument on bad
/// indices and std::domain_error if the difference is exactly zero.
Sign sigma(std::size_t i, std::size_t j, const ResidueVector& r);

/// n x (n-1) matrices: row k < n-1 holds sigma_{k,j} off the diagonal and
/// +/- (pos/neg) on it; the last row is all - (pos) or all + (neg).
SignMatrices build_matrices(const ResidueVector& r);

/// Checks, in order: diagonal and last-row structure, antisymmetry
/// sigma_ij = + iff sigma_ji = -, the implication sigma_ij = +, sigma_ik = -
/// => sigma_jk = -, one row with exactly c plus signs for each c in 0..n-1
/// in both matrices, and equality of the two row multisets. The first
/// violation is reported as a failure witness.
VerificationReport verify_sign_lemmas(const SignMatrices& m);
VerificationReport verify_sign_lemmas(const ResidueVector& r);

/// |N| for N = sum_k e^{y_k} prod_{j != k} e^{{r_k - r_j} y_j}
///           - sum_k prod_{j != k} e^{{r_k - r_j} y_j}.
/// Requires |sum y| <= 1e-14 and nonzero y_i.
double numerator_check(const ResidueVector& r, std::span<const double> y);

/// Exponent vectors of the positive and negative terms of N, computed from
/// the fractional differences directly.
struct NumeratorExponents {
  std::vector<std::vector<Rational>> positive;
  std::vector<std::vector<Rational>> negative;
};

NumeratorExponents numerator_exponents(const ResidueVector& r);

/// Decodes sign rows into exponent vectors (+ in column j -> {r_last - r_j},
/// - -> -{r_j - r_last}), checks they agree with `numerator_exponents`, and
/// checks that rows matched by plus count carry identical exponents.
VerificationReport exponent_bookkeeping_check(const ResidueVector& r);

/// Given reals a, b, c: if {a-b} - {a-c} >= 0 it equals {c-b}; if <= 0 it
/// equals -{b-c}. Returns whether both implications hold at (a, b, c).
bool fractional_difference_lemma_holds(const Rational& a, const Rational& b, const Rational& c);

}  // namespace dedekind
