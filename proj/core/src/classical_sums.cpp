#include "dedekind/classical_sums.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "dedekind/bernoulli.hpp"

namespace dedekind {

namespace {

void require_positive(long v, const char* name) {
  if (v < 1) {
    throw std::invalid_argument(std::string(name) + " must be >= 1, got " + std::to_string(v));
  }
}

void require_index(int v, const char* name) {
  if (v < 0) {
    throw std::invalid_argument(std::string(name) + " must be >= 0, got " + std::to_string(v));
  }
}

// -1/4 + (a/b + 1/(ab) + b/a) / 12
Rational reciprocity_rhs(const Rational& a, const Rational& b) {
  return Rational(-1, 4) + (a / b + Rational(1) / (a * b) + b / a) / Rational(12);
}

}  // namespace

Rational dedekind_sum_bruteforce(long a, long b) {
  require_positive(a, "a");
  require_positive(b, "b");
  Rational sum;
  for (long k = 1; k < b; ++k) {
    const long r = (k % b) * (a % b) % b;
    if (r == 0) continue;
    sum += sawtooth(Rational(r, b)) * sawtooth(Rational(k, b));
  }
  return sum;
}

Rational dedekind_sum_fast(const Integer& a, const Integer& b) {
  if (a < 1 || b < 1) throw std::invalid_argument("dedekind_sum_fast: a, b must be >= 1");
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (g != 1) {
    throw std::domain_error("dedekind_sum_fast: gcd(" + a.get_str() + ", " + b.get_str() +
                            ") != 1; use the brute-force evaluator");
  }
  // s(u, v) with u reduced mod v, then s(u, v) = rhs(u, v) - s(v, u).
  Rational acc;
  int sign = 1;
  Integer u = a % b;
  Integer v = b;
  while (u != 0) {
    const Rational term = reciprocity_rhs(Rational(u), Rational(v));
    acc += sign > 0 ? term : -term;
    sign = -sign;
    Integer next = v % u;
    v = u;
    u = next;
  }
  // Terminates at s(0, 1) = 0.
  return acc;
}

double dedekind_sum_cotangent(long a, long b) {
  require_positive(b, "b");
  if (a < 0) throw std::invalid_argument("dedekind_sum_cotangent: a must be >= 0");
  using std::numbers::pi;
  double sum = 0.0;
  const long ar = a % b;
  for (long k = 1; k < b; ++k) {
    const long r = (k * ar) % b;
    if (r == 0) continue;
    sum += 1.0 / std::tan(pi * static_cast<double>(r) / static_cast<double>(b)) /
           std::tan(pi * static_cast<double>(k) / static_cast<double>(b));
  }
  return sum / (4.0 * static_cast<double>(b));
}

VerificationReport dedekind_reciprocity_check(long a, long b) {
  VerificationReport report;
  report.identity = "dedekind-reciprocity";
  report.add_input("a", std::to_string(a));
  report.add_input("b", std::to_string(b));
  ReportTimer timer(report);
  require_positive(a, "a");
  require_positive(b, "b");
  if (gcd(a, b) != 1) {
    throw std::domain_error("dedekind reciprocity requires coprime a, b");
  }
  const Rational lhs = dedekind_sum_bruteforce(a, b) + dedekind_sum_bruteforce(b, a);
  const Rational rhs = reciprocity_rhs(a, b);
  report.lhs = lhs.str();
  report.rhs = rhs.str();
  if (lhs != rhs) report.fail("s(a,b)+s(b,a) = " + lhs.str() + ", expected " + rhs.str());
  return report;
}

std::string_view kind_name(const LegacySumParams& params) {
  struct Namer {
    std::string_view operator()(const ApostolParams&) const { return "apostol"; }
    std::string_view operator()(const CarlitzMikolasParams&) const { return "carlitz-mikolas"; }
    std::string_view operator()(const DedekindRademacherParams&) const {
      return "dedekind-rademacher";
    }
    std::string_view operator()(const TakacsParams&) const { return "takacs"; }
    std::string_view operator()(const HallWilsonZagierParams&) const {
      return "hall-wilson-zagier";
    }
  };
  return std::visit(Namer{}, params);
}

void validate(const LegacySumParams& params) {
  struct Validator {
    void operator()(const ApostolParams& p) const {
      require_positive(p.a, "a");
      require_positive(p.b, "b");
      require_index(p.n, "n");
    }
    void operator()(const CarlitzMikolasParams& p) const {
      require_positive(p.a, "a");
      require_positive(p.b, "b");
      require_positive(p.c, "c");
      require_index(p.m, "m");
      require_index(p.n, "n");
    }
    void operator()(const DedekindRademacherParams& p) const {
      require_positive(p.a, "a");
      require_positive(p.b, "b");
    }
    void operator()(const TakacsParams& p) const {
      require_positive(p.a, "a");
      require_positive(p.b, "b");
      require_index(p.n, "n");
    }
    void operator()(const HallWilsonZagierParams& p) const {
      require_positive(p.a, "a");
      require_positive(p.b, "b");
      require_positive(p.c, "c");
      require_index(p.m, "m");
      require_index(p.n, "n");
    }
  };
  std::visit(Validator{}, params);
}

Rational legacy_sum(const LegacySumParams& params) {
  validate(params);
  struct Summer {
    Rational operator()(const ApostolParams& p) const {
      Rational sum;
      for (long k = 0; k < p.b; ++k) {
        sum += sawtooth(Rational(k, p.b)) * periodized_bernoulli(p.n, Rational(k * p.a, p.b));
      }
      return sum;
    }
    Rational operator()(const CarlitzMikolasParams& p) const {
      Rational sum;
      for (long k = 0; k < p.a; ++k) {
        sum += periodized_bernoulli(p.m, Rational(k * p.b, p.a)) *
               periodized_bernoulli(p.n, Rational(k * p.c, p.a));
      }
      return sum;
    }
    Rational operator()(const DedekindRademacherParams& p) const {
      Rational sum;
      for (long k = 0; k < p.b; ++k) {
        const Rational t = (Rational(k) + p.y) / Rational(p.b);
        sum += sawtooth(Rational(p.a) * t - p.x) * sawtooth(t);
      }
      return sum;
    }
    Rational operator()(const TakacsParams& p) const {
      Rational sum;
      for (long k = 0; k < p.b; ++k) {
        const Rational t = (Rational(k) + p.y) / Rational(p.b);
        sum += sawtooth(t) * periodized_bernoulli(p.n, Rational(p.a) * t - p.x);
      }
      return sum;
    }
    Rational operator()(const HallWilsonZagierParams& p) const {
      Rational sum;
      for (long h = 0; h < p.c; ++h) {
        const Rational t = (Rational(h) + p.z) / Rational(p.c);
        sum += periodized_bernoulli(p.m, Rational(p.a) * t - p.x) *
               periodized_bernoulli(p.n, Rational(p.b) * t - p.y);
      }
      return sum;
    }
  };
  return std::visit(Summer{}, params);
}

}  // namespace dedekind
