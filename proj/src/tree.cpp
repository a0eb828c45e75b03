#include "wqo/tree.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>

#include "wqo/errors.hpp"

namespace wqo {

std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
  if (auto c = a.label <=> b.label; c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.children.begin(), a.children.end(), b.children.begin(),
      b.children.end());
}


std::size_t Tree::node_count() const {
  std::size_t n = 1;
  for (const Tree& c : children) n += c.node_count();
  return n;
}

std::size_t degree(const Tree& t) {
  std::size_t d = t.children.size();
  for (const Tree& c : t.children) d = std::max(d, degree(c));
  return d;
}

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<const Tree*, const Tree*>& p) const {
    auto a = reinterpret_cast<std::uintptr_t>(p.first);
    auto b = reinterpret_cast<std::uintptr_t>(p.second);
    return std::hash<std::uintptr_t>{}(a * 0x9e3779b97f4a7c15ULL ^ b);
  }
};

class Embedder {
 public:
  explicit Embedder(const FiniteQO& order) : order_(order) {}

  bool operator()(const Tree& t, const Tree& s) {
    auto key = std::make_pair(&t, &s);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool result = compute(t, s);
    memo_.emplace(key, result);
    return result;
  }

 private:
  bool compute(const Tree& t, const Tree& s) {
    if (t.is_leaf() && s.is_leaf()) return order_.leq(t.label, s.label);
    for (const Tree& child : s.children)
      if ((*this)(t, child)) return true;
    if (t.is_leaf() || !order_.leq(t.label, s.label)) return false;
    return subsequence_embeds(
        t.children.size(), s.children.size(), [&](std::size_t i, std::size_t j) {
          return (*this)(t.children[i], s.children[j]);
        });
  }

  const FiniteQO& order_;
  std::unordered_map<std::pair<const Tree*, const Tree*>, bool, PairHash> memo_;
};

void require_labels(const FiniteQO& order, const Tree& t) {
  if (!order.contains(t.label)) {
    throw DomainError("tree label " + std::to_string(t.label) +
                      " is not an element of the label order");
  }
  for (const Tree& c : t.children) require_labels(order, c);
}

class TreeEnumerator {
 public:
  TreeEnumerator(const FiniteQO& labels, std::optional<DegreeBound> bound)
      : labels_(labels), bound_(bound) {}

  const std::vector<Tree>& of_size(std::size_t n) {
    while (by_size_.size() <= n) extend();
    return by_size_[n];
  }

 private:
  void extend() {
    const std::size_t n = by_size_.size();
    std::vector<Tree> out;
    if (n >= 1) {
      const auto& fs = forests(n - 1, max_children());
      for (Element q = 0; q < labels_.size(); ++q)
        for (const auto& f : fs) out.emplace_back(q, f);
    }
    by_size_.push_back(std::move(out));
  }

  std::size_t max_children() const {
    return bound_ ? bound_->n : static_cast<std::size_t>(-1);
  }

  // Forests of total size m with at most max_len trees.
  const std::vector<std::vector<Tree>>& forests(std::size_t m,
                                                std::size_t max_len) {
    max_len = std::min(max_len, m);
    auto key = std::make_pair(m, max_len);
    if (auto it = forests_.find(key); it != forests_.end()) return it->second;
    std::vector<std::vector<Tree>> out;
    if (m == 0) {
      out.emplace_back();
    } else if (max_len > 0) {
      for (std::size_t k = 1; k <= m; ++k) {
        const std::vector<Tree> firsts = of_size(k);
        const auto rests = forests(m - k, max_len - 1);
        for (const Tree& first : firsts) {
          for (const auto& rest : rests) {
            std::vector<Tree> f;
            f.reserve(rest.size() + 1);
            f.push_back(first);
            f.insert(f.end(), rest.begin(), rest.end());
            out.push_back(std::move(f));
          }
        }
      }
    }
    return forests_.emplace(key, std::move(out)).first->second;
  }

  const FiniteQO& labels_;
  std::optional<DegreeBound> bound_;
  std::vector<std::vector<Tree>> by_size_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<Tree>>>
      forests_;
};

}  // namespace

bool embeds(const FiniteQO& order, const Tree& t, const Tree& s) {
  require_labels(order, t);
  require_labels(order, s);
  Embedder e(order);
  return e(t, s);
}

std::vector<Tree> enumerate_trees(const FiniteQO& labels, std::size_t max_nodes,
                                  std::optional<DegreeBound> bound,
                                  const Budget& budget) {
  if (max_nodes == 0) throw DomainError("max_nodes must be at least 1");
  TreeEnumerator gen(labels, bound);
  std::vector<Tree> out;
  for (std::size_t n = 1; n <= max_nodes; ++n) {
    const auto& layer = gen.of_size(n);
    out.insert(out.end(), layer.begin(), layer.end());
    check_terms(out.size(), budget);
    // Layers grow at least |labels|-fold, so stop before the next one
    // could overshoot badly.
    if (n < max_nodes) check_terms(out.size() * std::max<std::size_t>(labels.size(), 1), budget);
  }
  return out;
}

bool is_graded(const Tree& t, const GradeMap& grade) {
  if (t.label >= grade.size() || !grade[t.label]) {
    throw DomainError("no grade for label " + std::to_string(t.label));
  }
  bool ok = t.children.size() == *grade[t.label];
  for (const Tree& c : t.children) ok = is_graded(c, grade) && ok;
  return ok;
}

}  // namespace wqo
