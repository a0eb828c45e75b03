#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wqo/bigint.hpp"
#include "wqo/ordinal.hpp"

namespace wqo {

/// Term of the grammar  e ::= 0 | x^e + e. Terms are not normalized:
/// x^0+(x^0+0) and x^(x^0+0)+0 are distinct. Subterms are shared.
class ExpTerm {
 public:
  ExpTerm() = default;  // 0
  static ExpTerm zero() { return {}; }
  /// x^exponent + rest
  static ExpTerm node(ExpTerm exponent, ExpTerm rest);
  /// x^0 + 0
  static ExpTerm one() { return node(zero(), zero()); }

  bool is_zero() const { return node_ == nullptr; }
  const ExpTerm& exponent() const;
  const ExpTerm& rest() const;
  std::size_t size() const;

  /// Canonical text, e.g. "x^(x^(0)+(0))+(0)".
  std::string str() const;

  friend bool operator==(const ExpTerm& a, const ExpTerm& b);

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

/// a(k): 0 for 0, k^{c(k)} + b(k) for x^c + b.
BigInt eval_at(const ExpTerm& a, const BigInt& k, const Budget& budget = {});

/// a(w) with + read as the natural sum.
Ordinal to_ordinal(const ExpTerm& a);

/// All terms with a(2) <= bound_at_2, ordered by value at 2, then by the
/// value of the exponent, then exponent and rest in this same order.
std::vector<ExpTerm> enumerate_exp(std::uint64_t bound_at_2, const Budget& budget = {});

struct SwoVerdict {
  bool hypothesis_holds = false;
  /// First i with a_i(2) > 2_K(i).
  std::optional<std::size_t> violation;
  /// Least j < M with a_j(N) <= a_{j+1}(N), N = 2_K(M); empty for a
  /// descending witness.
  std::optional<std::size_t> j;
  BigInt base;
};

/// Finite check of the slow well-ordering assertion for one sequence.
SwoVerdict swo_check(std::uint64_t K, std::span<const ExpTerm> terms,
                     const Budget& budget = {});

struct SwoSearchResult {
  /// Least M for which every admissible sequence a_0..a_M has a step
  /// a_j(N) <= a_{j+1}(N); empty when max_M was reached first.
  std::optional<std::uint64_t> min_M;
  /// Length of the longest descending run found for each M tried.
  std::vector<std::size_t> longest_descent;
};

/// Least M <= max_M such that SWO's conclusion holds for every admissible
/// sequence of length M+1. Candidate values at each index are deduplicated;
/// the depth-first search tries larger values first and stops at the first
/// branch that reaches index M.
SwoSearchResult swo_search_min_M(std::uint64_t K, std::uint64_t max_M,
                                 const Budget& budget = {});

/// Distinct values a(N), ascending, over all terms with a(2) <= bound.
std::vector<BigInt> exp_values_at(std::uint64_t bound_at_2, const BigInt& N,
                                  const Budget& budget = {});

}  // namespace wqo
