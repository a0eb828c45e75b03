#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wqo/bigint.hpp"

namespace wqo {

/// Recurrence used for A_a(k, b).
///   Literal:  A_1(k,b) = b^k.
///   Repaired: A_1(k,b) = (b+1)^k.
/// Both continue with
///   A_{a+1}(k,1)   = A_a(k,a)^k
///   A_{a+1}(k,b+1) = A_a(k, A_{a+1}(k,b))^k
///   A_w(k,b)       = A_b(k,b),   A_w(k) = A_w(k,k).
/// Under Literal every A_a with a >= 2 is constantly 1.
enum class RecurrenceProfile { Literal, Repaired };

/// Relation used for a <=_k b.
///   Literal:   least relation with 1 <= a and a <= b => a <= b+c, c+b,
///              A_b(k,c), A_c(k,b). It relates exactly the pairs (1, t).
///   Embedding: additionally closed under congruence, which makes it a
///              reflexive, transitive homeomorphic embedding.
enum class RelationMode { Literal, Embedding };

/// Ackermannian term: 1, (a+b) or A(a,b) meaning A_a(k,b). The base k is
/// supplied at evaluation time. Subterms are shared.
class AckTerm {
 public:
  enum class Kind { One, Plus, App };

  AckTerm() = default;  // 1
  static AckTerm one() { return {}; }
  static AckTerm plus(AckTerm left, AckTerm right);
  /// A_index(k, arg)
  static AckTerm app(AckTerm index, AckTerm arg);

  Kind kind() const;
  bool is_one() const { return node_ == nullptr; }
  /// Left summand or Ackermann index.
  const AckTerm& left() const;
  /// Right summand or Ackermann argument.
  const AckTerm& right() const;
  std::size_t size() const;

  /// Canonical text: "1", "(a+b)" or "A(a,b)".
  std::string str() const;

  friend bool operator==(const AckTerm& a, const AckTerm& b);

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

/// A_a(k,b) for a, b, k >= 1. Throws DomainError for a zero argument and
/// BudgetExceeded when a value or the step count outgrows the budget.
BigInt ack_eval(RecurrenceProfile profile, const BigInt& a, const BigInt& k,
                const BigInt& b, const Budget& budget = {});

/// A_w(k,b) = A_b(k,b).
BigInt ack_omega(RecurrenceProfile profile, const BigInt& k, const BigInt& b,
                 const Budget& budget = {});

/// 1 -> 1, (a+b) -> a+b, A(a,b) -> A_{a}(k, b) on the values.
BigInt term_value(const AckTerm& t, const BigInt& k, RecurrenceProfile profile,
                  const Budget& budget = {});

/// A term read in base k.
struct BasedTerm {
  AckTerm term;
  std::uint64_t k = 1;

  BigInt value(RecurrenceProfile profile, const Budget& budget = {}) const {
    return term_value(term, k, profile, budget);
  }
  friend bool operator==(const BasedTerm&, const BasedTerm&) = default;
};

/// t[k := h]: same structure, read in base h.
BasedTerm base_change(const BasedTerm& t, std::uint64_t h);

bool leq_k(RelationMode mode, const AckTerm& s, const AckTerm& t);

/// f(K, i), the value bound of the W principles.
using BoundFn =
    std::function<BigInt(std::uint64_t K, std::uint64_t i, const Budget&)>;

/// f_d(K,i) = 2_{d-1}((i+2)^K), d >= 1.
BoundFn sigma_bound(std::uint64_t d);

/// Which argument the K-fold iteration of A_w acts on in A_w^K(i+2, 0).
///   ArgSlot:  x -> A_w(i+2, x) iterated K times from 0. Any K >= 1 reaches
///             A_0, which is undefined, and throws DomainError.
///   BaseSlot: x -> A_w(x) iterated K times from i+2.
enum class AtrWiring { ArgSlot, BaseSlot };

BoundFn atr_bound(AtrWiring wiring, RecurrenceProfile profile);

struct WVerdict {
  bool hypothesis_holds = false;
  /// First i with a_i(i+2) > f(K, i).
  std::optional<std::size_t> violation;
  /// Least j < M with a_j <= a_{j+1}; empty for a bad sequence.
  std::optional<std::size_t> j;
};

/// Finite check of W(f) for one sequence a_0..a_M. Term a_i is valued in base
/// i+2; the conclusion compares a_j[j+2 := j+3] with a_{j+1} in base j+3,
/// which is a structural comparison since the base is not part of the term.
WVerdict w_check(const BoundFn& f, std::uint64_t K, std::span<const AckTerm> terms,
                 RelationMode mode, RecurrenceProfile profile,
                 const Budget& budget = {});

/// t_i(n): a term of T_i with value n.
using SelectionFn = std::function<AckTerm(std::uint64_t i, std::uint64_t n)>;

/// Left-nested sum of n ones.
AckTerm default_selection(std::uint64_t i, std::uint64_t n);

struct WtVerdict {
  bool hypothesis_holds = false;
  std::optional<std::size_t> violation;
  /// Least (j, then i) pair i < j with t_{i+2}(a_i) <= t_{j+2}(a_j).
  std::optional<std::pair<std::size_t, std::size_t>> pair;
};

/// Finite check of W(t, f) for positive integers a_0..a_M. Selected terms
/// are validated to have the requested value.
WtVerdict wt_check(const SelectionFn& t, const BoundFn& f, std::uint64_t K,
                   std::span<const std::uint64_t> values, RelationMode mode,
                   RecurrenceProfile profile, const Budget& budget = {});

/// All terms with at most max_nodes nodes, by size, then One < Plus < App,
/// then left and right subterms in this order.
std::vector<AckTerm> enumerate_ack_terms(std::size_t max_nodes, const Budget& budget = {});

struct WSearchOptions {
  RelationMode mode = RelationMode::Embedding;
  RecurrenceProfile profile = RecurrenceProfile::Repaired;
  /// Node cap on candidate terms. Under Repaired a term of value v has at most
  /// 2v-1 nodes, so the cap is derived from the bound when unset. Literal
  /// universes are infinite and need an explicit cap.
  std::optional<std::size_t> max_nodes;
};

struct WSearchResult {
  std::optional<std::uint64_t> min_M;
  /// Size of the candidate universe at each index that was built.
  std::vector<std::size_t> universe_sizes;
  /// True when some universe was cut by an explicit node cap.
  bool truncated = false;
};

/// Least M <= max_M such that every admissible a_0..a_M has a step
/// a_j <= a_{j+1}.
WSearchResult w_search_min_M(const BoundFn& f, std::uint64_t K,
                             std::uint64_t max_M, const WSearchOptions& options,
                             const Budget& budget = {});

/// Terms admissible at index i: at most the node cap, value in base i+2 at
/// most f(K, i).
std::vector<AckTerm> w_universe(const BoundFn& f, std::uint64_t K,
                                std::uint64_t i, const WSearchOptions& options,
                                const Budget& budget, bool* truncated = nullptr);

}  // namespace wqo
