#pragma once

#include <functional>
#include <span>
#include <vector>

#include "dedekind/rational.hpp"
#include "dedekind/report.hpp"

namespace dedekind {

/// sum_{d | m} d^t. Throws std::invalid_argument for m < 1.
Rational divisor_sigma(long t, long m);

/// Checks sum_{d | m} sum_{k mod d} s((m/d) b + k a, a d) == sigma(m) s(b, a)
/// for coprime a, b, with brute-force inner sums.
VerificationReport pk_classical_check(long a, long b, long m);

/// A periodic function f with sum_{k mod a} f(x + k/a) = a^weight f(a x).
struct DedekindTypeFunction {
  std::function<Rational(const Rational&)> f;
  long weight = 0;
};

/// Bbar_p, of weight 1 - p.
DedekindTypeFunction bernoulli_component(int p);

/// S(a; a_1, ..., a_n) = sum_{k mod a} f_1(k a_1 / a) ... f_n(k a_n / a).
Rational dedekind_type_sum(long modulus, std::span<const long> multipliers,
                           std::span<const DedekindTypeFunction> functions);

/// Instantiation with f_j = Bbar_{p_j}; weights are m_j = 1 - p_j.
struct DedekindTypeSpec {
  long modulus = 1;
  std::vector<long> multipliers;
  std::vector<int> indices;

  /// Throws std::invalid_argument unless n >= 1, sizes match, modulus and
  /// multipliers are >= 1 and indices are >= 0.
  void validate() const;
  std::vector<DedekindTypeFunction> functions() const;
};

Rational dedekind_type_sum(const DedekindTypeSpec& spec);

/// Checks sum_{k mod a} f(x + k/a) == a^weight f(a x) for one component.
VerificationReport weight_condition_check(const DedekindTypeFunction& fn, long a,
                                          const Rational& x);

enum class PkVariant {
  /// d-power sum p - n and sigma index sum p - 1: the general identity with
  /// weights m_j = 1 - p_j substituted.
  theorem,
  /// d-power sum p - n + 1 and sigma index sum p, both shifted by one.
  /// Fails on part of the small grid; kept for comparison.
  corollary,
};

/// The variant that holds on the verified grid.
inline constexpr PkVariant kPinnedPkVariant = PkVariant::theorem;

/// Evaluates
///   sum_{d | m} d^e sum_{r_1..r_n mod d} S(a d; (m/d) a_1 + r_1 a, ..., (m/d) a_n + r_n a)
/// against m sigma_t(m) S(a; a_1, ..., a_n) with (e, t) fixed by the variant.
VerificationReport pk_general_check(const DedekindTypeSpec& spec, long m, PkVariant variant);

}  // namespace dedekind
