#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace wqo {

using Element = std::uint32_t;
using FiniteSeq = std::vector<Element>;

/// A quasi-order on the dense element set {0, ..., size-1}, stored as an
/// explicit relation matrix. Reflexivity and transitivity are checked when
/// the order is built, never assumed.
class FiniteQO {
 public:
  /// The empty order.
  FiniteQO() = default;

  /// Builds from an explicit list of related pairs. Reflexive pairs are added
  /// implicitly; a non-transitive relation throws std::invalid_argument.
  static FiniteQO from_pairs(std::size_t size,
                             std::span<const std::pair<Element, Element>> pairs);

  /// Reflexive-transitive closure of the given pairs.
  static FiniteQO closure_of(std::size_t size,
                             std::span<const std::pair<Element, Element>> pairs);

  /// Builds from a predicate; throws if it is not a quasi-order.
  static FiniteQO from_predicate(
      std::size_t size, const std::function<bool(Element, Element)>& leq);

  /// 0 < 1 < ... < size-1.
  static FiniteQO chain(std::size_t size);
  /// Equality order.
  static FiniteQO antichain(std::size_t size);

  std::size_t size() const { return size_; }
  bool contains(Element e) const { return e < size_; }

  /// Throws DomainError for elements outside the order.
  bool leq(Element a, Element b) const;
  bool comparable(Element a, Element b) const { return leq(a, b) || leq(b, a); }
  bool equivalent(Element a, Element b) const { return leq(a, b) && leq(b, a); }

  /// All related pairs in row-major order.
  std::vector<std::pair<Element, Element>> pairs() const;
  std::size_t relation_size() const;

  friend bool operator==(const FiniteQO&, const FiniteQO&) = default;

 private:
  FiniteQO(std::size_t size, std::vector<std::uint8_t> matrix)
      : size_(size), matrix_(std::move(matrix)) {}

  bool at(Element a, Element b) const { return matrix_[a * size_ + b] != 0; }
  void require(Element e) const;
  static void validate(std::size_t size, const std::vector<std::uint8_t>& m);

  std::size_t size_ = 0;
  std::vector<std::uint8_t> matrix_;
};

/// Total map between two finite orders.
struct OrderMap {
  FiniteQO domain;
  FiniteQO codomain;
  std::vector<Element> table;
};

/// Greedy leftmost matching for Higman's order: s embeds into t iff each
/// s[k] can be matched, in order, to a later position of t dominating it.
/// `leq(i, j)` compares s[i] with t[j].
template <class Leq>
bool subsequence_embeds(std::size_t s_len, std::size_t t_len, Leq&& leq) {
  std::size_t j = 0;
  for (std::size_t i = 0; i < s_len; ++i) {
    while (j < t_len && !leq(i, j)) ++j;
    if (j == t_len) return false;
    ++j;
  }
  return true;
}

/// Higman's order on finite sequences over `order`.
bool seq_embed(const FiniteQO& order, std::span<const Element> s,
               std::span<const Element> t);

/// Component-wise order on pairs; (a, b) is element a * q.size() + b.
FiniteQO product(const FiniteQO& p, const FiniteQO& q);

/// Tagged union; p's elements come first, q's are shifted by p.size().
FiniteQO disjoint_union(const FiniteQO& p, const FiniteQO& q);

/// Upward closure {x | exists b in subset, b <= x}, sorted ascending.
std::vector<Element> closure(const FiniteQO& order,
                             std::span<const Element> subset);

bool is_antichain(const FiniteQO& order, std::span<const Element> xs);

/// Topological order of the equivalence classes (each represented by its
/// least element), ties broken by the least identifier.
FiniteSeq linear_extension(const FiniteQO& order);

bool check_order_preserving(const OrderMap& m);
bool check_order_reflecting(const OrderMap& m);

/// Least (j, then i) pair i < j with xs[i] <= xs[j], or nullopt when xs is bad.
std::optional<std::pair<std::size_t, std::size_t>> find_good_pair(
    const FiniteQO& order, std::span<const Element> xs);

}  // namespace wqo
