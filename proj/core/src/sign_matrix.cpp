#include "dedekind/sign_matrix.hpp"

#include <cmath>
#include <map>
#include <tuple>
#include <stdexcept>

namespace dedekind {

ResidueVector::ResidueVector(std::vector<Rational> r) : r_(std::move(r)) {
  if (r_.size() < 2) throw std::invalid_argument("residue vector needs n >= 2");
  for (std::size_t i = 0; i < r_.size(); ++i) {
    for (std::size_t j = i + 1; j < r_.size(); ++j) {
      if ((r_[i] - r_[j]).is_integer()) {
        throw std::domain_error("residues " + std::to_string(i + 1) + " and " +
                                std::to_string(j + 1) + " differ by an integer");
      }
    }
  }
}

ResidueVector ResidueVector::from_shifts(std::span<const long> a, std::span<const Rational> x,
                                         std::span<const long> h) {
  if (a.size() != x.size() || a.size() != h.size()) {
    throw std::invalid_argument("a, x, h differ in length");
  }
  std::vector<Rational> r;
  r.reserve(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] < 1) throw std::invalid_argument("moduli must be >= 1");
    r.push_back((x[j] + Rational(h[j])) / Rational(a[j]));
  }
  return ResidueVector(std::move(r));
}

std::vector<Sign> SignMatrix::row(std::size_t i) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::size_t SignMatrix::plus_count(std::size_t i) const {
  std::size_t c = 0;
  for (std::size_t j = 0; j < cols_; ++j) c += at(i, j) == Sign::plus;
  return c;
}

std::string SignMatrix::row_str(std::size_t i) const {
  std::string s;
  for (std::size_t j = 0; j < cols_; ++j) s += to_char(at(i, j));
  return s;
}

Sign sigma(std::size_t i, std::size_t j, const ResidueVector& r) {
  const std::size_t last = r.size() - 1;
  if (i == j || i >= last || j >= last) {
    throw std::invalid_argument("sigma: need distinct indices below n-1");
  }
  const Rational d = (r[i] - r[j]).frac() - (r[i] - r[last]).frac();
  if (d.is_zero()) throw std::domain_error("sigma: fractional difference is zero");
  return d.sign() > 0 ? Sign::plus : Sign::minus;
}

SignMatrices build_matrices(const ResidueVector& r) {
  const std::size_t n = r.size();
  SignMatrices m{SignMatrix(n, n - 1), SignMatrix(n, n - 1)};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::size_t j = 0; j + 1 < n; ++j) {
      if (j == k) {
        m.pos.at(k, j) = Sign::plus;
        m.neg.at(k, j) = Sign::minus;
      } else {
        const Sign s = sigma(k, j, r);
        m.pos.at(k, j) = s;
        m.neg.at(k, j) = s;
      }
    }
  }
  for (std::size_t j = 0; j + 1 < n; ++j) {
    m.pos.at(n - 1, j) = Sign::minus;
    m.neg.at(n - 1, j) = Sign::plus;
  }
  return m;
}

namespace {

std::string idx(std::size_t i) { return std::to_string(i + 1); }

// Returns the row index holding each plus count, or an error message.
std::string unique_plus_counts(const SignMatrix& m, const char* name,
                               std::vector<std::size_t>& row_of_count) {
  const std::size_t n = m.rows();
  row_of_count.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t c = m.plus_count(i);
    if (row_of_count[c] != n) {
      return std::string("unique rows: ") + name + " rows " + idx(row_of_count[c]) + " and " +
             idx(i) + " both have " + std::to_string(c) + " plus signs";
    }
    row_of_count[c] = i;
  }
  return {};
}

}  // namespace

VerificationReport verify_sign_lemmas(const SignMatrices& m) {
  VerificationReport report;
  report.identity = "sign-lemmas";
  ReportTimer timer(report);
  const std::size_t n = m.pos.rows();
  if (n < 2 || m.pos.cols() != n - 1 || m.neg.rows() != n || m.neg.cols() != n - 1) {
    throw std::invalid_argument("sign matrices must both be n x (n-1)");
  }
  report.add_input("n", std::to_string(n));

  // Structure: diagonal and last row.
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.pos.at(k, k) != Sign::plus || m.neg.at(k, k) != Sign::minus) {
      report.fail("structure: diagonal entry (" + idx(k) + "," + idx(k) + ")");
      return report;
    }
  }
  for (std::size_t j = 0; j + 1 < n; ++j) {
    if (m.pos.at(n - 1, j) != Sign::minus || m.neg.at(n - 1, j) != Sign::plus) {
      report.fail("structure: last-row entry in column " + idx(j));
      return report;
    }
  }
  // Off-diagonal entries are sigma and must coincide in both matrices.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = 0; j + 1 < n; ++j) {
      if (i != j && m.pos.at(i, j) != m.neg.at(i, j)) {
        report.fail("structure: sigma(" + idx(i) + "," + idx(j) + ") differs between matrices");
        return report;
      }
    }
  }
  const auto s = [&](std::size_t i, std::size_t j) { return m.pos.at(i, j); };
  // Antisymmetry.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j + 1 < n; ++j) {
      if ((s(i, j) == Sign::plus) != (s(j, i) == Sign::minus)) {
        report.fail("antisymmetry: sigma(" + idx(i) + "," + idx(j) + ")=" + to_char(s(i, j)) +
                    ", sigma(" + idx(j) + "," + idx(i) + ")=" + to_char(s(j, i)));
        return report;
      }
    }
  }
  // sigma_ij = + and sigma_ik = - imply sigma_jk = -.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = 0; j + 1 < n; ++j) {
      for (std::size_t k = 0; k + 1 < n; ++k) {
        if (i == j || i == k || j == k) continue;
        if (s(i, j) == Sign::plus && s(i, k) == Sign::minus && s(j, k) != Sign::minus) {
          report.fail("implication: sigma(" + idx(i) + "," + idx(j) + ")=+, sigma(" + idx(i) +
                      "," + idx(k) + ")=-, but sigma(" + idx(j) + "," + idx(k) + ")=+");
          return report;
        }
      }
    }
  }
  std::vector<std::size_t> pos_rows;
  std::vector<std::size_t> neg_rows;
  for (auto [mat, name, rows] : {std::tuple{&m.pos, "M_pos", &pos_rows},
                                 std::tuple{&m.neg, "M_neg", &neg_rows}}) {
    if (auto err = unique_plus_counts(*mat, name, *rows); !err.empty()) {
      report.fail(err);
      return report;
    }
  }
  // Rows with equal plus counts must be identical.
  for (std::size_t c = 0; c < n; ++c) {
    if (m.pos.row(pos_rows[c]) != m.neg.row(neg_rows[c])) {
      report.fail("row matching: M_pos row " + idx(pos_rows[c]) + " (" +
                  m.pos.row_str(pos_rows[c]) + ") vs M_neg row " + idx(neg_rows[c]) + " (" +
                  m.neg.row_str(neg_rows[c]) + ")");
      return report;
    }
  }
  report.detail = "M_pos equals M_neg after row permutation";
  return report;
}

VerificationReport verify_sign_lemmas(const ResidueVector& r) {
  auto report = verify_sign_lemmas(build_matrices(r));
  report.inputs.insert(report.inputs.begin(), {"r", join_values(r.values())});
  return report;
}

double numerator_check(const ResidueVector& r, std::span<const double> y) {
  const std::size_t n = r.size();
  if (y.size() != n) throw std::invalid_argument("numerator_check: |y| != |r|");
  double ysum = 0.0;
  for (double v : y) {
    if (v == 0.0) throw std::invalid_argument("numerator_check: y components must be nonzero");
    ysum += v;
  }
  if (std::abs(ysum) > 1e-14) throw std::invalid_argument("numerator_check: y must sum to zero");

  double positive = 0.0;
  double negative = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    double exponent = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != k) exponent += (r[k] - r[j]).frac().to_double() * y[j];
    }
    positive += std::exp(y[k] + exponent);
    negative += std::exp(exponent);
  }
  return std::abs(positive - negative);
}

NumeratorExponents numerator_exponents(const ResidueVector& r) {
  const std::size_t n = r.size();
  const std::size_t last = n - 1;
  NumeratorExponents out;
  for (std::size_t k = 0; k < last; ++k) {
    std::vector<Rational> pos(last);
    std::vector<Rational> neg(last);
    for (std::size_t j = 0; j < last; ++j) {
      if (j == k) {
        pos[j] = (r[last] - r[k]).frac();
        neg[j] = -(r[k] - r[last]).frac();
      } else {
        pos[j] = (r[k] - r[j]).frac() - (r[k] - r[last]).frac();
        neg[j] = pos[j];
      }
    }
    out.positive.push_back(std::move(pos));
    out.negative.push_back(std::move(neg));
  }
  std::vector<Rational> pos_last(last);
  std::vector<Rational> neg_last(last);
  for (std::size_t j = 0; j < last; ++j) {
    pos_last[j] = -(r[j] - r[last]).frac();
    neg_last[j] = (r[last] - r[j]).frac();
  }
  out.positive.push_back(std::move(pos_last));
  out.negative.push_back(std::move(neg_last));
  return out;
}

VerificationReport exponent_bookkeeping_check(const ResidueVector& r) {
  VerificationReport report;
  report.identity = "exponent-bookkeeping";
  report.add_input("r", join_values(r.values()));
  ReportTimer timer(report);

  const std::size_t n = r.size();
  const std::size_t last = n - 1;
  const SignMatrices m = build_matrices(r);
  const NumeratorExponents direct = numerator_exponents(r);

  const auto decode = [&](const SignMatrix& mat, std::size_t row) {
    std::vector<Rational> e(last);
    for (std::size_t j = 0; j < last; ++j) {
      e[j] = mat.at(row, j) == Sign::plus ? (r[last] - r[j]).frac() : -(r[j] - r[last]).frac();
    }
    return e;
  };

  std::map<std::size_t, std::vector<Rational>> pos_by_count;
  std::map<std::size_t, std::vector<Rational>> neg_by_count;
  for (std::size_t row = 0; row < n; ++row) {
    const auto pe = decode(m.pos, row);
    const auto ne = decode(m.neg, row);
    if (pe != direct.positive[row]) {
      report.fail("positive term " + std::to_string(row + 1) + " exponent does not match its sign row");
      return report;
    }
    if (ne != direct.negative[row]) {
      report.fail("negative term " + std::to_string(row + 1) + " exponent does not match its sign row");
      return report;
    }
    pos_by_count[m.pos.plus_count(row)] = pe;
    neg_by_count[m.neg.plus_count(row)] = ne;
  }
  if (pos_by_count.size() != n || neg_by_count.size() != n) {
    report.fail("plus counts are not distinct across rows");
    return report;
  }
  for (const auto& [count, exps] : pos_by_count) {
    if (neg_by_count.at(count) != exps) {
      report.fail("rows with " + std::to_string(count) + " plus signs carry different exponents");
      return report;
    }
  }
  report.detail = "positive and negative exponent multisets coincide";
  return report;
}

bool fractional_difference_lemma_holds(const Rational& a, const Rational& b, const Rational& c) {
  const Rational d = (a - b).frac() - (a - c).frac();
  if (d.sign() >= 0 && d != (c - b).frac()) return false;
  if (d.sign() <= 0 && d != -(b - c).frac()) return false;
  return true;
}

}  // namespace dedekind
