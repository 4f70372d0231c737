#pragma once

// Seeded instance generators shared by the unit and acceptance suites.

#include <cstdint>
#include <random>
#include <vector>

#include "dedekind/bd_sum.hpp"
#include "dedekind/rational.hpp"

namespace dedekind::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  /// num/den with 1 <= den <= max_den and num in [lo*den, hi*den).
  Rational rational(long max_den, long lo = -3, long hi = 3) {
    const long den = integer(1, max_den);
    const long num = integer(lo * den, hi * den - 1);
    return {num, den};
  }

  std::vector<long> coprime_moduli(std::size_t n, long amax) {
    while (true) {
      std::vector<long> a(n);
      for (auto& v : a) v = integer(1, amax);
      if (pairwise_coprime(a)) return a;
    }
  }

  std::vector<Rational> shifts(std::size_t n, long max_den) {
    std::vector<Rational> x(n);
    for (auto& v : x) {
      const long den = integer(1, max_den);
      v = Rational(integer(0, den - 1), den);
    }
    return x;
  }

  /// Shifts satisfying the genericity hypothesis for `a` (by rejection).
  std::vector<Rational> generic_shifts(const std::vector<long>& a, long max_den) {
    while (true) {
      auto x = shifts(a.size(), max_den);
      if (genericity_check(a, x)) return x;
    }
  }

  /// Zero-sum vector with every |y_i| >= floor_abs.
  std::vector<double> zero_sum(std::size_t n, double scale = 1.0, double floor_abs = 0.05) {
    while (true) {
      std::vector<double> y(n);
      double s = 0.0;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        y[i] = real(-scale, scale);
        s += y[i];
      }
      y[n - 1] = -s;
      double check = 0.0;
      bool ok = true;
      for (double v : y) {
        check += v;
        ok = ok && std::abs(v) >= floor_abs * scale;
      }
      if (ok && std::abs(check) <= 1e-14) return y;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace dedekind::testing
