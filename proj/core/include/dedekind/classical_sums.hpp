#pragma once

#include <string_view>
#include <variant>

#include "dedekind/rational.hpp"
#include "dedekind/report.hpp"

namespace dedekind {

/// s(a, b) = sum_{k mod b} ((k a / b)) ((k / b)) by direct summation.
/// Coprimality is not required. Throws std::invalid_argument unless a, b >= 1.
Rational dedekind_sum_bruteforce(long a, long b);

/// s(a, b) via the reciprocity law and the Euclidean algorithm, in
/// O(log min(a, b)) rational steps. Requires gcd(a, b) = 1 and throws
/// std::domain_error otherwise; use the brute-force evaluator in that case.
Rational dedekind_sum_fast(const Integer& a, const Integer& b);

/// (1/4b) sum_{k=1}^{b-1} cot(pi k a / b) cot(pi k / b) in double precision.
/// Terms with k a = 0 mod b contribute 0, matching ((n)) = 0 at integers.
double dedekind_sum_cotangent(long a, long b);

/// s(a,b) + s(b,a) == -1/4 + (a/b + 1/(ab) + b/a)/12 for coprime a, b.
VerificationReport dedekind_reciprocity_check(long a, long b);

// Historical generalizations. Moduli are >= 1, Bernoulli indices >= 0.

/// sum_{k mod b} ((k/b)) Bbar_n(k a / b)
struct ApostolParams {
  long a = 1, b = 1;
  int n = 1;
};

/// sum_{k mod a} Bbar_m(k b / a) Bbar_n(k c / a)
struct CarlitzMikolasParams {
  long a = 1, b = 1, c = 1;
  int m = 1, n = 1;
};

/// sum_{k mod b} ((a (k+y)/b - x)) (((k+y)/b))
struct DedekindRademacherParams {
  long a = 1, b = 1;
  Rational x, y;
};

/// sum_{k mod b} (((k+y)/b)) Bbar_n(a (k+y)/b - x)
struct TakacsParams {
  long a = 1, b = 1;
  int n = 1;
  Rational x, y;
};

/// sum_{h mod c} Bbar_m(a (h+z)/c - x) Bbar_n(b (h+z)/c - y)
struct HallWilsonZagierParams {
  long a = 1, b = 1, c = 1;
  int m = 1, n = 1;
  Rational x, y, z;
};

using LegacySumParams = std::variant<ApostolParams, CarlitzMikolasParams,
                                     DedekindRademacherParams, TakacsParams,
                                     HallWilsonZagierParams>;

/// "apostol", "carlitz-mikolas", "dedekind-rademacher", "takacs", "hall-wilson-zagier".
std::string_view kind_name(const LegacySumParams& params);

/// Throws std::invalid_argument when a modulus is < 1 or an index is < 0.
void validate(const LegacySumParams& params);

/// Direct summation of the selected definition.
Rational legacy_sum(const LegacySumParams& params);

}  // namespace dedekind
