#include "dedekind/bernoulli.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>

namespace dedekind {

namespace {

// Entries are appended under the unique lock and never move afterwards
// (std::deque::push_back keeps references valid), so readers may keep
// references obtained under the shared lock.
class BernoulliCache {
 public:
  const Rational& number(int k) {
    ensure(k);
    std::shared_lock lock(mutex_);
    return numbers_[static_cast<std::size_t>(k)];
  }

  const BernoulliPoly& poly(int k) {
    ensure(k);
    std::shared_lock lock(mutex_);
    return polys_[static_cast<std::size_t>(k)];
  }

 private:
  void ensure(int k) {
    {
      std::shared_lock lock(mutex_);
      if (static_cast<int>(numbers_.size()) > k) return;
    }
    std::unique_lock lock(mutex_);
    while (static_cast<int>(numbers_.size()) <= k) extend();
  }

  // Appends B_n and B_n(u) for n = current size.
  void extend() {
    const int n = static_cast<int>(numbers_.size());
    const auto binomials = binomial_row(n + 1);
    Rational bn;
    if (n == 0) {
      bn = 1;
    } else {
      // sum_{j=0}^{n} C(n+1, j) B_j = 0
      Rational acc;
      for (int j = 0; j < n; ++j) acc += Rational(binomials[j]) * numbers_[j];
      bn = -acc / Rational(n + 1);
    }
    numbers_.push_back(bn);

    BernoulliPoly p;
    p.degree = n;
    p.coeffs.resize(static_cast<std::size_t>(n) + 1);
    const auto row = binomial_row(n);
    for (int j = 0; j <= n; ++j) {
      p.coeffs[static_cast<std::size_t>(n - j)] = Rational(row[j]) * numbers_[j];
    }
    polys_.push_back(std::move(p));
  }

  static std::vector<Integer> binomial_row(int n) {
    std::vector<Integer> row(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
      mpz_bin_uiui(row[j].get_mpz_t(), static_cast<unsigned long>(n),
                   static_cast<unsigned long>(j));
    }
    return row;
  }

  std::shared_mutex mutex_;
  std::deque<Rational> numbers_;
  std::deque<BernoulliPoly> polys_;
};

BernoulliCache& cache() {
  static BernoulliCache instance;
  return instance;
}

void require_index(int k) {
  if (k < 0) throw std::invalid_argument("Bernoulli index must be non-negative, got " +
                                         std::to_string(k));
}

}  // namespace

Rational bernoulli_number(int k) {
  require_index(k);
  return cache().number(k);
}

const BernoulliPoly& bernoulli_poly(int k) {
  require_index(k);
  return cache().poly(k);
}

Rational BernoulliPoly::operator()(const Rational& u) const {
  Rational acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc *= u;
    acc += *it;
  }
  return acc;
}

double BernoulliPoly::operator()(double u) const {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * u + it->to_double();
  return acc;
}

Rational periodized_bernoulli(int k, const Rational& u) {
  require_index(k);
  if (k == 0) return 1;
  const Rational f = u.frac();
  if (k == 1) return f.is_zero() ? Rational() : f - Rational(1, 2);
  return bernoulli_poly(k)(f);
}

Rational sawtooth(const Rational& u) {
  if (u.is_integer()) return {};
  return u.frac() - Rational(1, 2);
}

VerificationReport raabe_check(long a, int m, const Rational& x) {
  VerificationReport report;
  report.identity = "raabe";
  report.add_input("a", std::to_string(a));
  report.add_input("m", std::to_string(m));
  report.add_input("x", x.str());
  ReportTimer timer(report);
  if (a < 1) throw std::invalid_argument("raabe_check: a must be positive");

  Rational lhs;
  for (long h = 0; h < a; ++h) lhs += periodized_bernoulli(m, x + Rational(h, a));
  const Rational rhs = Rational(a).pow(1 - m) * periodized_bernoulli(m, Rational(a) * x);

  report.lhs = lhs.str();
  report.rhs = rhs.str();
  if (lhs != rhs) report.fail("lhs " + lhs.str() + " != rhs " + rhs.str());
  return report;
}

}  // namespace dedekind
