#include "dedekind/petersson_knopp.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "dedekind/bernoulli.hpp"
#include "dedekind/classical_sums.hpp"

namespace dedekind {

namespace {

std::vector<long> divisors(long m) {
  std::vector<long> out;
  for (long d = 1; d <= m; ++d) {
    if (m % d == 0) out.push_back(d);
  }
  return out;
}

const char* variant_name(PkVariant v) {
  return v == PkVariant::theorem ? "theorem" : "corollary";
}

}  // namespace

Rational divisor_sigma(long t, long m) {
  if (m < 1) throw std::invalid_argument("divisor_sigma: m must be >= 1");
  Rational sum;
  for (long d : divisors(m)) sum += Rational(d).pow(t);
  return sum;
}

VerificationReport pk_classical_check(long a, long b, long m) {
  VerificationReport report;
  report.identity = "pk-classical";
  report.add_input("a", std::to_string(a));
  report.add_input("b", std::to_string(b));
  report.add_input("m", std::to_string(m));
  ReportTimer timer(report);
  if (a < 1 || b < 1 || m < 1) throw std::invalid_argument("pk_classical: a, b, m must be >= 1");
  if (gcd(a, b) != 1) throw std::domain_error("pk_classical: a and b must be coprime");

  Rational lhs;
  for (long d : divisors(m)) {
    for (long k = 0; k < d; ++k) lhs += dedekind_sum_bruteforce((m / d) * b + k * a, a * d);
  }
  const Rational rhs = divisor_sigma(1, m) * dedekind_sum_bruteforce(b, a);
  report.lhs = lhs.str();
  report.rhs = rhs.str();
  if (lhs != rhs) report.fail("lhs " + lhs.str() + " != rhs " + rhs.str());
  return report;
}

DedekindTypeFunction bernoulli_component(int p) {
  if (p < 0) throw std::invalid_argument("Bernoulli index must be >= 0");
  return {[p](const Rational& u) { return periodized_bernoulli(p, u); }, 1L - p};
}

Rational dedekind_type_sum(long modulus, std::span<const long> multipliers,
                           std::span<const DedekindTypeFunction> functions) {
  if (modulus < 1) throw std::invalid_argument("modulus must be >= 1");
  if (multipliers.size() != functions.size() || multipliers.empty()) {
    throw std::invalid_argument("need one multiplier per function, at least one");
  }
  Rational sum;
  for (long k = 0; k < modulus; ++k) {
    Rational term(1);
    for (std::size_t j = 0; j < functions.size() && !term.is_zero(); ++j) {
      term *= functions[j].f(Rational(k * multipliers[j], modulus));
    }
    sum += term;
  }
  return sum;
}

void DedekindTypeSpec::validate() const {
  if (multipliers.empty()) throw std::invalid_argument("DedekindTypeSpec: need n >= 1");
  if (indices.size() != multipliers.size()) {
    throw std::invalid_argument("DedekindTypeSpec: one index per multiplier");
  }
  if (modulus < 1) throw std::invalid_argument("DedekindTypeSpec: modulus must be >= 1");
  for (long v : multipliers) {
    if (v < 1) throw std::invalid_argument("DedekindTypeSpec: multipliers must be >= 1");
  }
  for (int p : indices) {
    if (p < 0) throw std::invalid_argument("DedekindTypeSpec: indices must be >= 0");
  }
}

std::vector<DedekindTypeFunction> DedekindTypeSpec::functions() const {
  std::vector<DedekindTypeFunction> out;
  out.reserve(indices.size());
  for (int p : indices) out.push_back(bernoulli_component(p));
  return out;
}

Rational dedekind_type_sum(const DedekindTypeSpec& spec) {
  spec.validate();
  const auto fns = spec.functions();
  return dedekind_type_sum(spec.modulus, spec.multipliers, fns);
}

VerificationReport weight_condition_check(const DedekindTypeFunction& fn, long a,
                                          const Rational& x) {
  VerificationReport report;
  report.identity = "weight-condition";
  report.add_input("a", std::to_string(a));
  report.add_input("x", x.str());
  report.add_input("weight", std::to_string(fn.weight));
  ReportTimer timer(report);
  if (a < 1) throw std::invalid_argument("weight_condition_check: a must be >= 1");
  Rational lhs;
  for (long k = 0; k < a; ++k) lhs += fn.f(x + Rational(k, a));
  const Rational rhs = Rational(a).pow(fn.weight) * fn.f(Rational(a) * x);
  report.lhs = lhs.str();
  report.rhs = rhs.str();
  if (lhs != rhs) report.fail("lhs " + lhs.str() + " != rhs " + rhs.str());
  return report;
}

VerificationReport pk_general_check(const DedekindTypeSpec& spec, long m, PkVariant variant) {
  VerificationReport report;
  report.identity = "pk-general";
  report.add_input("a", std::to_string(spec.modulus));
  report.add_input("multipliers", join_values(spec.multipliers));
  report.add_input("p", join_values(spec.indices));
  report.add_input("m", std::to_string(m));
  report.add_input("variant", variant_name(variant));
  ReportTimer timer(report);
  spec.validate();
  if (m < 1) throw std::invalid_argument("pk_general: m must be >= 1");

  const auto fns = spec.functions();
  const long n = static_cast<long>(spec.indices.size());
  long weight_sum = 0;
  for (const auto& f : fns) weight_sum += f.weight;
  // With weights 1 - p_j: -sum m_j = sum p - n, and n - 1 - sum m_j = sum p - 1.
  const long d_power = variant == PkVariant::theorem ? -weight_sum : -weight_sum + 1;
  const long sigma_index = variant == PkVariant::theorem ? n - 1 - weight_sum : n - weight_sum;

  Rational lhs;
  std::vector<long> args(spec.multipliers.size());
  for (long d : divisors(m)) {
    Rational inner;
    std::vector<long> r(spec.multipliers.size(), 0);
    while (true) {
      for (std::size_t j = 0; j < args.size(); ++j) {
        args[j] = (m / d) * spec.multipliers[j] + r[j] * spec.modulus;
      }
      inner += dedekind_type_sum(spec.modulus * d, args, fns);
      std::size_t pos = 0;
      while (pos < r.size() && ++r[pos] == d) r[pos++] = 0;
      if (pos == r.size()) break;
    }
    lhs += Rational(d).pow(d_power) * inner;
  }
  const Rational rhs =
      Rational(m) * divisor_sigma(sigma_index, m) * dedekind_type_sum(spec.modulus, spec.multipliers, fns);

  report.lhs = lhs.str();
  report.rhs = rhs.str();
  report.detail = "d-power " + std::to_string(d_power) + ", sigma index " +
                  std::to_string(sigma_index);
  if (lhs != rhs) report.fail("lhs " + lhs.str() + " != rhs " + rhs.str());
  return report;
}

}  // namespace dedekind
