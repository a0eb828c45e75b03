#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wqo/bigint.hpp"

namespace wqo {

/// Ordinal below epsilon_0 in hereditary Cantor normal form:
/// w^e_1 * c_1 + ... + w^e_n * c_n with e_1 > ... > e_n and c_i >= 1.
/// The empty sum is 0.
class Ordinal {
 public:
  struct Summand;

  Ordinal() = default;  // 0

  static Ordinal zero() { return {}; }
  static Ordinal finite(const BigInt& n);
  static Ordinal omega() { return omega_power(finite(1)); }
  /// w^exponent * coefficient; coefficient must be positive.
  static Ordinal omega_power(const Ordinal& exponent, const BigInt& coefficient = 1);
  /// Validates the CNF invariants.
  static Ordinal from_summands(std::vector<Summand> summands);

  const std::vector<Summand>& summands() const { return summands_; }
  bool is_zero() const { return summands_.empty(); }
  bool is_successor() const;
  bool is_limit() const { return !is_zero() && !is_successor(); }
  /// Value when finite.
  std::optional<BigInt> as_finite() const;

  /// Canonical text, e.g. "w^(w)*2+w+3".
  std::string str() const;

  friend std::strong_ordering compare(const Ordinal& a, const Ordinal& b);
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
    return compare(a, b);
  }
  friend bool operator==(const Ordinal& a, const Ordinal& b) {
    return compare(a, b) == std::strong_ordering::equal;
  }

 private:
  std::vector<Summand> summands_;
};

struct Ordinal::Summand {
  Ordinal exponent;
  BigInt coefficient;
};

std::strong_ordering compare(const Ordinal& a, const Ordinal& b);

/// Hessenberg sum: merge summands by exponent, adding coefficients.
Ordinal natural_sum(const Ordinal& a, const Ordinal& b);

/// Hereditary maximum over all coefficients, 0 for the ordinal 0.
BigInt max_coefficient(const Ordinal& a);

/// Cantor fundamental sequence. For a = b + w^g * c:
///   g = 0:            a[i] = b + (c-1)
///   g = d + 1:        a[i] = b + w^g * (c-1) + w^d * i
///   g limit:          a[i] = b + w^g * (c-1) + w^(g[i])
/// Throws DomainError for 0.
Ordinal fundamental_seq(const Ordinal& a, const BigInt& i);

/// Slow-growing hierarchy: G_0(n) = 0, G_{a+1}(n) = G_a(n) + 1,
/// G_l(n) = G_{l[n]}(n). Computed through the identity
/// G_{w^e_1*c_1 + ... }(n) = c_1 * n^{G_{e_1}(n)} + ..., which the recursion
/// satisfies for the fundamental sequences above.
BigInt slow_growing(const Ordinal& a, const BigInt& n, const Budget& budget = {});

/// w_0 = 1, w_{k+1} = w^{w_k}.
Ordinal omega_tower(std::uint64_t k);

struct DescentVerdict {
  bool hypothesis_holds = false;
  /// First i with max_coefficient(alphas[i]) > 2_K(i) when the hypothesis fails.
  std::optional<std::size_t> violation;
  /// Least j < M with alphas[j] <= alphas[j+1]; empty for a bad sequence.
  std::optional<std::size_t> j;
};

/// Finite check of: max_coefficient(alpha_i) <= 2_K(i) for all i <= M implies
/// alpha_j <= alpha_{j+1} for some j < M, with M = alphas.size() - 1.
DescentVerdict descent_check(std::uint64_t K, std::span<const Ordinal> alphas,
                             const Budget& budget = {});

/// alpha_0 = w_{K-2}, alpha_{i+1} = alpha_i[i], up to and including the first
/// 0. Requires K >= 2; throws BudgetExceeded after max_length terms.
std::vector<Ordinal> canonical_descent(std::uint64_t K, std::size_t max_length);

}  // namespace wqo
