#include "wqo/finite_qo.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

#include "wqo/errors.hpp"

namespace wqo {

void FiniteQO::validate(std::size_t size, const std::vector<std::uint8_t>& m) {
  for (std::size_t a = 0; a < size; ++a) {
    if (!m[a * size + a]) {
      throw std::invalid_argument("relation is not reflexive at " +
                                  std::to_string(a));
    }
  }
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      if (!m[a * size + b]) continue;
      for (std::size_t c = 0; c < size; ++c) {
        if (m[b * size + c] && !m[a * size + c]) {
          throw std::invalid_argument(
              "relation is not transitive: " + std::to_string(a) + " <= " +
              std::to_string(b) + " <= " + std::to_string(c));
        }
      }
    }
  }
}

static std::vector<std::uint8_t> matrix_from(
    std::size_t size, std::span<const std::pair<Element, Element>> pairs) {
  std::vector<std::uint8_t> m(size * size, 0);
  for (std::size_t a = 0; a < size; ++a) m[a * size + a] = 1;
  for (auto [a, b] : pairs) {
    if (a >= size || b >= size) {
      throw DomainError("pair mentions element outside 0.." +
                        std::to_string(size == 0 ? 0 : size - 1));
    }
    m[a * size + b] = 1;
  }
  return m;
}

FiniteQO FiniteQO::from_pairs(
    std::size_t size, std::span<const std::pair<Element, Element>> pairs) {
  auto m = matrix_from(size, pairs);
  validate(size, m);
  return FiniteQO(size, std::move(m));
}

FiniteQO FiniteQO::closure_of(
    std::size_t size, std::span<const std::pair<Element, Element>> pairs) {
  auto m = matrix_from(size, pairs);
  // Warshall
  for (std::size_t k = 0; k < size; ++k)
    for (std::size_t a = 0; a < size; ++a)
      if (m[a * size + k])
        for (std::size_t b = 0; b < size; ++b)
          if (m[k * size + b]) m[a * size + b] = 1;
  return FiniteQO(size, std::move(m));
}

FiniteQO FiniteQO::from_predicate(
    std::size_t size, const std::function<bool(Element, Element)>& leq) {
  std::vector<std::uint8_t> m(size * size, 0);
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b)
      m[a * size + b] = leq(static_cast<Element>(a), static_cast<Element>(b));
  validate(size, m);
  return FiniteQO(size, std::move(m));
}

FiniteQO FiniteQO::chain(std::size_t size) {
  return from_predicate(size, [](Element a, Element b) { return a <= b; });
}

FiniteQO FiniteQO::antichain(std::size_t size) {
  return from_predicate(size, [](Element a, Element b) { return a == b; });
}

void FiniteQO::require(Element e) const {
  if (e >= size_) {
    throw DomainError("unknown element " + std::to_string(e) +
                      " (order has " + std::to_string(size_) + " elements)");
  }
}

bool FiniteQO::leq(Element a, Element b) const {
  require(a);
  require(b);
  return at(a, b);
}

std::vector<std::pair<Element, Element>> FiniteQO::pairs() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element a = 0; a < size_; ++a)
    for (Element b = 0; b < size_; ++b)
      if (at(a, b)) out.emplace_back(a, b);
  return out;
}

std::size_t FiniteQO::relation_size() const {
  return static_cast<std::size_t>(
      std::count(matrix_.begin(), matrix_.end(), std::uint8_t{1}));
}

bool seq_embed(const FiniteQO& order, std::span<const Element> s,
               std::span<const Element> t) {
  for (Element e : s) (void)order.leq(e, e);
  for (Element e : t) (void)order.leq(e, e);
  return subsequence_embeds(s.size(), t.size(), [&](std::size_t i,
                                                    std::size_t j) {
    return order.leq(s[i], t[j]);
  });
}

FiniteQO product(const FiniteQO& p, const FiniteQO& q) {
  const std::size_t n = p.size() * q.size();
  const auto qs = static_cast<Element>(q.size());
  return FiniteQO::from_predicate(n, [&](Element x, Element y) {
    return p.leq(x / qs, y / qs) && q.leq(x % qs, y % qs);
  });
}

FiniteQO disjoint_union(const FiniteQO& p, const FiniteQO& q) {
  const auto ps = static_cast<Element>(p.size());
  return FiniteQO::from_predicate(p.size() + q.size(), [&](Element x, Element y) {
    if (x < ps && y < ps) return p.leq(x, y);
    if (x >= ps && y >= ps) return q.leq(x - ps, y - ps);
    return false;
  });
}

std::vector<Element> closure(const FiniteQO& order,
                             std::span<const Element> subset) {
  std::vector<Element> out;
  for (Element b : subset) (void)order.leq(b, b);
  for (Element x = 0; x < order.size(); ++x) {
    if (std::any_of(subset.begin(), subset.end(),
                    [&](Element b) { return order.leq(b, x); })) {
      out.push_back(x);
    }
  }
  return out;
}

bool is_antichain(const FiniteQO& order, std::span<const Element> xs) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (order.comparable(xs[i], xs[j])) return false;
  for (Element e : xs) (void)order.leq(e, e);
  return true;
}

FiniteSeq linear_extension(const FiniteQO& order) {
  const std::size_t n = order.size();
  std::vector<Element> rep(n);
  for (Element a = 0; a < n; ++a) {
    rep[a] = a;
    for (Element b = 0; b < a; ++b) {
      if (order.equivalent(a, b)) {
        rep[a] = rep[b];
        break;
      }
    }
  }
  std::vector<Element> classes;
  for (Element a = 0; a < n; ++a)
    if (rep[a] == a) classes.push_back(a);

  std::vector<std::size_t> indegree(n, 0);
  for (Element a : classes)
    for (Element b : classes)
      if (a != b && order.leq(a, b)) ++indegree[b];

  std::priority_queue<Element, std::vector<Element>, std::greater<>> ready;
  for (Element a : classes)
    if (indegree[a] == 0) ready.push(a);
  FiniteSeq out;
  while (!ready.empty()) {
    Element a = ready.top();
    ready.pop();
    out.push_back(a);
    for (Element b : classes) {
      if (b != a && order.leq(a, b) && --indegree[b] == 0) ready.push(b);
    }
  }
  return out;
}

static void require_total(const OrderMap& m) {
  if (m.table.size() != m.domain.size()) {
    throw DomainError("order map is not total over its domain");
  }
  for (Element v : m.table) (void)m.codomain.leq(v, v);
}

bool check_order_preserving(const OrderMap& m) {
  require_total(m);
  for (Element a = 0; a < m.domain.size(); ++a)
    for (Element b = 0; b < m.domain.size(); ++b)
      if (m.domain.leq(a, b) && !m.codomain.leq(m.table[a], m.table[b]))
        return false;
  return true;
}

bool check_order_reflecting(const OrderMap& m) {
  require_total(m);
  for (Element a = 0; a < m.domain.size(); ++a)
    for (Element b = 0; b < m.domain.size(); ++b)
      if (m.codomain.leq(m.table[a], m.table[b]) && !m.domain.leq(a, b))
        return false;
  return true;
}

std::optional<std::pair<std::size_t, std::size_t>> find_good_pair(
    const FiniteQO& order, std::span<const Element> xs) {
  for (Element e : xs) (void)order.leq(e, e);
  for (std::size_t j = 1; j < xs.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (order.leq(xs[i], xs[j])) return std::make_pair(i, j);
  return std::nullopt;
}

}  // namespace wqo
