#include "dedekind/bd_sum.hpp"

#include <stdexcept>
#include <string>

#include "dedekind/bernoulli.hpp"

namespace dedekind {

namespace {

void require_matching(std::span<const long> a, std::span<const Rational> x) {
  if (a.size() != x.size()) {
    throw std::invalid_argument("moduli and shifts differ in length");
  }
  for (long ai : a) {
    if (ai < 1) throw std::invalid_argument("moduli must be >= 1");
  }
}

// Advances `h` through the mixed-radix range prod [0, a_i); false when done.
bool next_tuple(std::vector<long>& h, std::span<const long> a) {
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (++h[i] < a[i]) return true;
    h[i] = 0;
  }
  return false;
}

}  // namespace

void BDSumSpec::validate() const {
  const std::size_t n = a.size();
  if (n < 2) throw std::invalid_argument("BDSumSpec: need n >= 2");
  if (x.size() != n) throw std::invalid_argument("BDSumSpec: |x| != |a|");
  if (p.size() != n - 1) throw std::invalid_argument("BDSumSpec: |p| != n - 1");
  if (k >= n) throw std::invalid_argument("BDSumSpec: distinguished index out of range");
  for (long ai : a) {
    if (ai < 1) throw std::invalid_argument("BDSumSpec: moduli must be >= 1");
  }
  for (int pi : p) {
    if (pi < 0) throw std::invalid_argument("BDSumSpec: exponents must be >= 0");
  }
}

Rational bd_sum(const BDSumSpec& spec) {
  spec.validate();
  const std::size_t n = spec.size();
  const long ak = spec.a[spec.k];
  Rational sum;
  for (long h = 0; h < ak; ++h) {
    const Rational t = (Rational(h) + spec.x[spec.k]) / Rational(ak);
    Rational term(1);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) {
      if (i == spec.k) continue;
      term *= periodized_bernoulli(spec.exponent(i), Rational(spec.a[i]) * t - spec.x[i]);
    }
    sum += term;
  }
  return sum;
}

Rational bd_sum_full_residue(const BDSumSpec& spec) {
  spec.validate();
  const std::size_t n = spec.size();
  std::vector<long> h(n, 0);
  Rational sum;
  do {
    const Rational rk = (spec.x[spec.k] + Rational(h[spec.k])) / Rational(spec.a[spec.k]);
    Rational term(1);
    for (std::size_t j = 0; j < n && !term.is_zero(); ++j) {
      if (j == spec.k) continue;
      const Rational rj = (spec.x[j] + Rational(h[j])) / Rational(spec.a[j]);
      term *= periodized_bernoulli(spec.exponent(j), rk - rj);
    }
    sum += term;
  } while (next_tuple(h, spec.a));
  return sum;
}

Rational full_residue_scale(const BDSumSpec& spec) {
  spec.validate();
  Rational scale(1);
  for (std::size_t j = 0; j < spec.size(); ++j) {
    if (j == spec.k) continue;
    scale *= Rational(spec.a[j]).pow(1 - spec.exponent(j));
  }
  return scale;
}

bool pairwise_coprime(std::span<const long> a) {
  for (std::size_t u = 0; u < a.size(); ++u) {
    for (std::size_t v = u + 1; v < a.size(); ++v) {
      if (gcd(a[u], a[v]) != 1) return false;
    }
  }
  return true;
}

bool genericity_check(std::span<const long> a, std::span<const Rational> x) {
  require_matching(a, x);
  if (!pairwise_coprime(a)) {
    throw std::domain_error("genericity_check: moduli must be pairwise coprime");
  }
  for (std::size_t u = 0; u < a.size(); ++u) {
    for (std::size_t v = u + 1; v < a.size(); ++v) {
      for (long hu = 0; hu < a[u]; ++hu) {
        const Rational ru = (x[u] - Rational(hu)) / Rational(a[u]);
        for (long hv = 0; hv < a[v]; ++hv) {
          if ((ru - (x[v] - Rational(hv)) / Rational(a[v])).is_integer()) return false;
        }
      }
    }
  }
  return true;
}

bool genericity_shortcut(std::span<const long> a, std::span<const Rational> x) {
  require_matching(a, x);
  if (!pairwise_coprime(a)) {
    throw std::domain_error("genericity_shortcut: moduli must be pairwise coprime");
  }
  for (std::size_t u = 0; u < a.size(); ++u) {
    for (std::size_t v = u + 1; v < a.size(); ++v) {
      if ((Rational(a[v]) * x[u] - Rational(a[u]) * x[v]).is_integer()) return false;
    }
  }
  return true;
}

BDSumSpec embed_legacy(const LegacySumParams& params) {
  validate(params);
  struct Embedder {
    BDSumSpec operator()(const ApostolParams& p) const {
      return {{p.a, 1, p.b}, {0, 0, 0}, 2, {p.n, 1}};
    }
    BDSumSpec operator()(const CarlitzMikolasParams& p) const {
      return {{p.b, p.c, p.a}, {0, 0, 0}, 2, {p.m, p.n}};
    }
    BDSumSpec operator()(const DedekindRademacherParams& p) const {
      return {{p.a, 1, p.b}, {p.x, 0, p.y}, 2, {1, 1}};
    }
    BDSumSpec operator()(const TakacsParams& p) const {
      return {{p.a, 1, p.b}, {p.x, 0, p.y}, 2, {p.n, 1}};
    }
    BDSumSpec operator()(const HallWilsonZagierParams& p) const {
      return {{p.a, p.b, p.c}, {p.x, p.y, p.z}, 2, {p.m, p.n}};
    }
  };
  return std::visit(Embedder{}, params);
}

}  // namespace dedekind
