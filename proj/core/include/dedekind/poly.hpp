#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "dedekind/rational.hpp"
#include "dedekind/report.hpp"

namespace dedekind {

using Exponents = std::vector<int>;

/// Multivariate polynomial over Rational with every monomial of total degree
/// at most `max_degree`. Products drop monomials above the bound. Only
/// nonzero coefficients are stored.
class TruncatedMultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational>;

  /// Throws std::invalid_argument for nvars == 0 or max_degree < 0.
  TruncatedMultiPoly(std::size_t nvars, int max_degree);

  static TruncatedMultiPoly constant(std::size_t nvars, int max_degree, const Rational& c);
  /// The monomial y_index (zero-based).
  static TruncatedMultiPoly variable(std::size_t nvars, int max_degree, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  int max_degree() const { return max_degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Exponents& e) const;

  /// Adds c * y^e. Ignored when deg(e) exceeds the bound; zero results are erased.
  void add_term(const Exponents& e, const Rational& c);

  TruncatedMultiPoly& operator+=(const TruncatedMultiPoly& rhs);
  TruncatedMultiPoly& operator-=(const TruncatedMultiPoly& rhs);
  TruncatedMultiPoly& operator*=(const Rational& c);
  TruncatedMultiPoly operator*(const TruncatedMultiPoly& rhs) const;
  TruncatedMultiPoly operator-() const;

  friend TruncatedMultiPoly operator+(TruncatedMultiPoly lhs, const TruncatedMultiPoly& rhs) {
    return lhs += rhs;
  }
  friend TruncatedMultiPoly operator-(TruncatedMultiPoly lhs, const TruncatedMultiPoly& rhs) {
    return lhs -= rhs;
  }
  friend TruncatedMultiPoly operator*(TruncatedMultiPoly lhs, const Rational& c) {
    return lhs *= c;
  }
  friend bool operator==(const TruncatedMultiPoly&, const TruncatedMultiPoly&) = default;

  /// Same polynomial with a lower bound; drops monomials above it.
  TruncatedMultiPoly truncated(int max_degree) const;

  /// Terms of total degree exactly d.
  TruncatedMultiPoly homogeneous_component(int d) const;

  /// Substitutes y_n := -(y_1 + ... + y_{n-1}) and returns the result in the
  /// first n - 1 variables. Requires nvars >= 2.
  TruncatedMultiPoly eliminate_last_variable() const;

  double evaluate(std::span<const double> y) const;

  std::vector<Term> to_terms() const;

  /// Human-readable form, e.g. "1/4*y1^2*y2 + 1/4*y1*y2^2"; "0" when empty.
  std::string str() const;

 private:
  void require_compatible(const TruncatedMultiPoly& rhs) const;

  std::size_t nvars_;
  int max_degree_;
  TermMap terms_;
};

int total_degree(const Exponents& e);

}  // namespace dedekind
