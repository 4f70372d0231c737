#pragma once

#include <vector>

#include "dedekind/rational.hpp"
#include "dedekind/report.hpp"

namespace dedekind {

// Sign convention: B_1 = -1/2. This is the convention forced by the
// generating function e^{uz}/(e^z - 1) = sum_k B_k(u) z^{k-1} / k!.
// Some references use B_1 = +1/2; nothing here does.

/// Bernoulli number B_k. Memoized; safe to call from several threads.
/// Throws std::invalid_argument for k < 0.
Rational bernoulli_number(int k);

/// Monic Bernoulli polynomial B_k(u) = sum_j C(k,j) B_j u^{k-j}.
struct BernoulliPoly {
  int degree = 0;
  /// Coefficient of u^j at index j; size degree + 1.
  std::vector<Rational> coeffs;

  Rational operator()(const Rational& u) const;
  double operator()(double u) const;
};

/// Throws std::invalid_argument for k < 0.
const BernoulliPoly& bernoulli_poly(int k);

/// Periodized Bernoulli function: B_k({u}), except that the k = 1 function
/// vanishes at integers.
Rational periodized_bernoulli(int k, const Rational& u);

/// ((u)) = {u} - 1/2 off the integers and 0 on them.
Rational sawtooth(const Rational& u);

/// Checks sum_{h mod a} Bbar_m(x + h/a) == a^{1-m} Bbar_m(a x) exactly.
/// lhs/rhs in the report hold both sides.
VerificationReport raabe_check(long a, int m, const Rational& x);

}  // namespace dedekind
