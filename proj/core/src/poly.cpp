#include "dedekind/poly.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dedekind {

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

TruncatedMultiPoly::TruncatedMultiPoly(std::size_t nvars, int max_degree)
    : nvars_(nvars), max_degree_(max_degree) {
  if (nvars == 0) throw std::invalid_argument("polynomial needs at least one variable");
  if (max_degree < 0) throw std::invalid_argument("degree bound must be non-negative");
}

TruncatedMultiPoly TruncatedMultiPoly::constant(std::size_t nvars, int max_degree,
                                                const Rational& c) {
  TruncatedMultiPoly p(nvars, max_degree);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

TruncatedMultiPoly TruncatedMultiPoly::variable(std::size_t nvars, int max_degree,
                                                std::size_t index) {
  if (index >= nvars) throw std::out_of_range("variable index out of range");
  TruncatedMultiPoly p(nvars, max_degree);
  Exponents e(nvars, 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

Rational TruncatedMultiPoly::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational() : it->second;
}

void TruncatedMultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != nvars_) throw std::invalid_argument("exponent vector has wrong length");
  if (c.is_zero() || total_degree(e) > max_degree_) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TruncatedMultiPoly::require_compatible(const TruncatedMultiPoly& rhs) const {
  if (nvars_ != rhs.nvars_ || max_degree_ != rhs.max_degree_) {
    throw std::invalid_argument("polynomials differ in variable count or degree bound");
  }
}

TruncatedMultiPoly& TruncatedMultiPoly::operator+=(const TruncatedMultiPoly& rhs) {
  require_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

TruncatedMultiPoly& TruncatedMultiPoly::operator-=(const TruncatedMultiPoly& rhs) {
  require_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

TruncatedMultiPoly& TruncatedMultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

TruncatedMultiPoly TruncatedMultiPoly::operator*(const TruncatedMultiPoly& rhs) const {
  require_compatible(rhs);
  TruncatedMultiPoly out(nvars_, max_degree_);
  Exponents e(nvars_);
  for (const auto& [e1, c1] : terms_) {
    const int d1 = total_degree(e1);
    for (const auto& [e2, c2] : rhs.terms_) {
      if (d1 + total_degree(e2) > max_degree_) continue;
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      out.add_term(e, c1 * c2);
    }
  }
  return out;
}

TruncatedMultiPoly TruncatedMultiPoly::operator-() const {
  TruncatedMultiPoly out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

TruncatedMultiPoly TruncatedMultiPoly::truncated(int max_degree) const {
  TruncatedMultiPoly out(nvars_, max_degree);
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  return out;
}

TruncatedMultiPoly TruncatedMultiPoly::homogeneous_component(int d) const {
  TruncatedMultiPoly out(nvars_, max_degree_);
  for (const auto& [e, c] : terms_) {
    if (total_degree(e) == d) out.add_term(e, c);
  }
  return out;
}

TruncatedMultiPoly TruncatedMultiPoly::eliminate_last_variable() const {
  if (nvars_ < 2) throw std::invalid_argument("cannot eliminate the only variable");
  const std::size_t m = nvars_ - 1;

  // powers[e] = (-(y_1 + ... + y_m))^e
  TruncatedMultiPoly neg_sum(m, max_degree_);
  for (std::size_t i = 0; i < m; ++i) {
    Exponents e(m, 0);
    e[i] = 1;
    neg_sum.add_term(e, -1);
  }
  std::vector<TruncatedMultiPoly> powers{constant(m, max_degree_, 1)};

  TruncatedMultiPoly out(m, max_degree_);
  for (const auto& [e, c] : terms_) {
    const int last = e.back();
    while (static_cast<int>(powers.size()) <= last) powers.push_back(powers.back() * neg_sum);
    const Exponents head(e.begin(), e.end() - 1);
    const int head_degree = total_degree(head);
    for (const auto& [pe, pc] : powers[static_cast<std::size_t>(last)].terms()) {
      if (head_degree + total_degree(pe) > max_degree_) continue;
      Exponents sum(m);
      for (std::size_t i = 0; i < m; ++i) sum[i] = head[i] + pe[i];
      out.add_term(sum, c * pc);
    }
  }
  return out;
}

double TruncatedMultiPoly::evaluate(std::span<const double> y) const {
  if (y.size() != nvars_) throw std::invalid_argument("evaluation point has wrong length");
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = c.to_double();
    for (std::size_t i = 0; i < nvars_; ++i) t *= std::pow(y[i], e[i]);
    sum += t;
  }
  return sum;
}

std::vector<Term> TruncatedMultiPoly::to_terms() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back({e, c.str()});
  return out;
}

std::string TruncatedMultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += c.sign() < 0 ? " - " : " + ";
    else if (c.sign() < 0) out += "-";
    const Rational mag = c.abs();
    const bool constant_term = total_degree(e) == 0;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "y" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (constant_term) {
      out += mag.str();
    } else if (mag == Rational(1)) {
      out += mono;
    } else {
      out += mag.str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace dedekind
