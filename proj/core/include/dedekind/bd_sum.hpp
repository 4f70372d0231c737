#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dedekind/classical_sums.hpp"
#include "dedekind/rational.hpp"

namespace dedekind {

/// Parameters of one Bernoulli-Dedekind sum
///
///   S = sum_{h mod a_k} prod_{i != k} Bbar_{p_i}(a_i (h + x_k) / a_k - x_i).
///
/// `k` is the zero-based index of the distinguished modulus. `p` has one
/// entry per i != k, in increasing order of i; use `exponent(i)` to look one
/// up by the full index.
struct BDSumSpec {
  std::vector<long> a;
  std::vector<Rational> x;
  std::size_t k = 0;
  std::vector<int> p;

  std::size_t size() const { return a.size(); }

  /// p_i for i != k.
  int exponent(std::size_t i) const { return p[i < k ? i : i - 1]; }

  /// Throws std::invalid_argument unless n >= 2, |a| = |x| = n, |p| = n - 1,
  /// k < n, every a_i >= 1 and every p_i >= 0.
  void validate() const;
};

/// Direct summation over h = 0..a_k-1.
Rational bd_sum(const BDSumSpec& spec);

/// Sum over every residue tuple (h_1 mod a_1, ..., h_n mod a_n) of
/// prod_{j != k} Bbar_{p_j}((x_k + h_k)/a_k - (x_j + h_j)/a_j). Equals
/// bd_sum(spec) * full_residue_scale(spec).
Rational bd_sum_full_residue(const BDSumSpec& spec);

/// prod_{j != k} a_j^{1 - p_j}
Rational full_residue_scale(const BDSumSpec& spec);

bool pairwise_coprime(std::span<const long> a);

/// True iff (x_u - h_u)/a_u - (x_v - h_v)/a_v is never an integer, for all
/// u < v and all residues h. This is the exhaustive scan. Throws
/// std::domain_error unless `a` is pairwise coprime, std::invalid_argument
/// on size mismatch.
bool genericity_check(std::span<const long> a, std::span<const Rational> x);

/// Same predicate via the per-pair test a_v x_u - a_u x_v not in Z, which is
/// equivalent for pairwise coprime moduli (CRT).
bool genericity_shortcut(std::span<const long> a, std::span<const Rational> x);

/// The BDSumSpec whose bd_sum equals legacy_sum(params).
BDSumSpec embed_legacy(const LegacySumParams& params);

}  // namespace dedekind
