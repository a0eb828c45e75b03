#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "wqo/bigint.hpp"
#include "wqo/finite_qo.hpp"

namespace wqo {

/// Finite ordered labelled tree; a node with no children is the leaf `q[]`.
struct Tree {
  Element label = 0;
  std::vector<Tree> children;

  Tree() = default;
  explicit Tree(Element l, std::vector<Tree> cs = {})
      : label(l), children(std::move(cs)) {}

  bool is_leaf() const { return children.empty(); }
  std::size_t node_count() const;

  friend bool operator==(const Tree&, const Tree&) = default;
  friend std::strong_ordering operator<=>(const Tree& a, const Tree& b);
};

struct DegreeBound {
  std::size_t n = 0;
};

/// Branching degree: 0 for leaves, else max(child count, children's degrees).
std::size_t degree(const Tree& t);

/// Kruskal embedding t ⪯ s over the label order. Holds when
///   1. both are leaves and label(t) <= label(s); or
///   2. t ⪯ some immediate subtree of s; or
///   3. t is not a leaf, label(t) <= label(s), and the children of t embed
///      into the children of s under Higman's order with ⪯ as element order.
/// A non-leaf never embeds into a leaf.
bool embeds(const FiniteQO& order, const Tree& t, const Tree& s);

/// All trees with at most `max_nodes` nodes and labels from `labels`,
/// optionally of bounded degree. Ordered by node count, then root label,
/// then children in generation order.
std::vector<Tree> enumerate_trees(const FiniteQO& labels, std::size_t max_nodes,
                                  std::optional<DegreeBound> bound = {},
                                  const Budget& budget = {});

/// Grade assignment indexed by label; nullopt marks a missing grade.
using GradeMap = std::vector<std::optional<std::size_t>>;

/// Every node has exactly grade(label) children. Throws DomainError when a
/// label occurring in t has no grade.
bool is_graded(const Tree& t, const GradeMap& grade);

}  // namespace wqo
