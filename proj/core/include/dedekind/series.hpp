#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dedekind/poly.hpp"
#include "dedekind/rational.hpp"
#include "dedekind/report.hpp"

namespace dedekind {

/// Coefficients of z * beta(u, z), where
///   beta(u, z) = sum_{m >= 0} Bbar_m(u) / m! * z^{m-1}.
/// coeffs[m] = Bbar_m(u) / m! for m = 0..degree.
struct BetaSeries {
  Rational anchor;
  int degree = 0;
  std::vector<Rational> coeffs;
};

BetaSeries beta_series(const Rational& u, int degree);

/// Closed form of beta(u, y): (1/2)(e^y + 1)/(e^y - 1) when u is an integer,
/// e^{{u} y}/(e^y - 1) otherwise. A float u counts as an integer when it is
/// within 1e-12 of one. Throws std::invalid_argument for y == 0.
double beta_eval(double u, double y);
double beta_eval(const Rational& u, double y);

enum class OmegaPath {
  /// Sum over residue tuples of products of beta series.
  h_tuples,
  /// Sum over exponent vectors of Bernoulli-Dedekind sums.
  p_vectors,
};

/// (y_1 ... y_n) * Omega for distinguished index k (zero-based), truncated at
/// total degree `degree`. The result is a polynomial in y_1..y_n.
///
/// Requires pairwise coprime moduli (std::domain_error otherwise). The
/// h_tuples path also requires the genericity hypothesis and throws
/// std::domain_error when it fails.
TruncatedMultiPoly norm_omega(std::span<const long> a, std::span<const Rational> x,
                              std::size_t k, int degree, OmegaPath path);

/// sum_k norm_omega(a, x, k) with y_n replaced by -(y_1 + ... + y_{n-1}).
/// The zero polynomial means the reciprocity identity holds through `degree`.
TruncatedMultiPoly reciprocity_residual(std::span<const long> a, std::span<const Rational> x,
                                        int degree, OmegaPath path = OmegaPath::p_vectors);

/// Report form of reciprocity_residual: passes iff the residual is zero.
/// Requires the genericity hypothesis (std::domain_error otherwise).
VerificationReport reciprocity_check(std::span<const long> a, std::span<const Rational> x,
                                     int degree, OmegaPath path = OmegaPath::p_vectors);

/// Compares the two norm_omega paths for every distinguished index.
VerificationReport cross_path_check(std::span<const long> a, std::span<const Rational> x,
                                    int degree);

std::string_view to_string(OmegaPath path);

/// Whether (x_i)_{i in subset} lies in (a_i)_{i in subset} * R + Z^|subset|.
bool in_scaled_lattice(std::span<const long> a, std::span<const Rational> x,
                       std::span<const std::size_t> subset);

/// Size of the largest index subset (of size >= 2) that is related in the
/// sense of `in_scaled_lattice`, with one such subset. Size 0 when none.
struct RelationSummary {
  std::size_t largest = 0;
  std::vector<std::size_t> subset;
};

RelationSummary largest_related_subset(std::span<const long> a, std::span<const Rational> x);

/// Case number for the three- and four-variable reciprocity analyses:
/// related subset of size n is case 1, size n-1 case 2, and so on; no
/// related pair is case n.
int relation_case(std::span<const long> a, std::span<const Rational> x);

std::string roman_case(int c);

/// -(1/4) y1 y2 y3 with y3 = -(y1 + y2), i.e. (1/4) y1 y2 (y1 + y2).
TruncatedMultiPoly hwz_case_one_expected(int degree);

/// (y1 y2 y3 y4) * (-(1/4)) sum_k beta(0, y_k), with y4 eliminated. This is
/// the beta form of (i/8) sum_k cot(y_k / 2i).
TruncatedMultiPoly four_var_case_one_expected(int degree);

/// (i/8) sum_k cot(y_k / (2i)), evaluated in complex arithmetic.
double four_var_cotangent_value(std::span<const double> y);

/// Three-variable reciprocity: case (i) must give -1/4, cases (ii)/(iii) 0.
/// Requires |a| = |x| = 3 and pairwise coprime moduli.
VerificationReport hwz_case_check(std::span<const long> a, std::span<const Rational> x,
                                  int degree);

/// Four-variable reciprocity. Case (i) is checked against the cotangent
/// value (exact series plus a float cross-check at seeded zero-sum points),
/// cases (iii)/(iv) against 0. Case (ii) is open: its residual is returned
/// with status reported_only.
VerificationReport four_var_case_residual(std::span<const long> a, std::span<const Rational> x,
                                          int degree);

/// Float evaluation of sum_k sum_h prod_{j != k} beta(r_k - r_j, y_j).
/// Accepts irrational shifts. Requires pairwise coprime moduli, nonzero y_i
/// and |sum y_i| <= 1e-14.
double numeric_residual(std::span<const long> a, std::span<const double> x,
                        std::span<const double> y);

/// Calls fn(e) for every exponent vector of length `len` with total degree
/// at most `bound`, in lexicographic order.
template <typename Fn>
void for_each_exponent(std::size_t len, int bound, Fn&& fn) {
  std::vector<int> e(len, 0);
  auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
    if (pos == len) {
      fn(static_cast<const std::vector<int>&>(e));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      e[pos] = v;
      self(self, pos + 1, left - v);
    }
    e[pos] = 0;
  };
  rec(rec, 0, bound);
}

}  // namespace dedekind
