#include "wqo/algebra.hpp"

#include <map>
#include <string>

namespace wqo {

AlgebraSignature::AlgebraSignature(FiniteQO generators, FiniteQO opsyms,
                                   std::vector<std::size_t> arity,
                                   ArityMode mode,
                                   std::vector<std::string> generator_names,
                                   std::vector<std::string> op_names)
    : generators_(std::move(generators)),
      opsyms_(std::move(opsyms)),
      arity_(std::move(arity)),
      mode_(mode),
      label_order_(disjoint_union(generators_, opsyms_)),
      gen_names_(std::move(generator_names)),
      op_names_(std::move(op_names)) {
  if (arity_.size() != opsyms_.size()) {
    throw std::invalid_argument("arity table does not cover every operation");
  }
  for (std::size_t a : arity_) {
    if (a == 0) throw std::invalid_argument("operation arity must be >= 1");
  }
  if (mode_ == ArityMode::Fixed) {
    for (auto [a, b] : opsyms_.pairs()) {
      if (arity_[a] != arity_[b]) {
        throw std::invalid_argument(
            "fixed-arity signature relates operations of different arity");
      }
    }
  }
  if (gen_names_.empty()) {
    for (std::size_t i = 0; i < generators_.size(); ++i)
      gen_names_.push_back("c" + std::to_string(i));
  }
  if (op_names_.empty()) {
    for (std::size_t i = 0; i < opsyms_.size(); ++i)
      op_names_.push_back("f" + std::to_string(i));
  }
  if (gen_names_.size() != generators_.size() ||
      op_names_.size() != opsyms_.size()) {
    throw std::invalid_argument("name table size mismatch");
  }
}

std::size_t AlgebraSignature::arity(Element op) const {
  if (op >= arity_.size()) {
    throw DomainError("unknown operation " + std::to_string(op));
  }
  return arity_[op];
}

Element AlgebraSignature::generator_label(Element c) const {
  if (c >= generators_.size()) {
    throw DomainError("unknown generator " + std::to_string(c));
  }
  return c;
}

Element AlgebraSignature::op_label(Element op) const {
  (void)arity(op);
  return static_cast<Element>(generators_.size() + op);
}

bool AlgebraSignature::is_generator_label(Element label) const {
  if (label >= label_count()) {
    throw DomainError("unknown label " + std::to_string(label));
  }
  return label < generators_.size();
}

Element AlgebraSignature::op_of_label(Element label) const {
  if (is_generator_label(label)) {
    throw DomainError("label " + std::to_string(label) + " is a generator");
  }
  return static_cast<Element>(label - generators_.size());
}

GradeMap AlgebraSignature::grades() const {
  GradeMap g(label_count());
  for (Element l = 0; l < label_count(); ++l) g[l] = grade(*this, l);
  return g;
}

const std::string& AlgebraSignature::label_name(Element label) const {
  return is_generator_label(label) ? gen_names_[label]
                                   : op_names_[op_of_label(label)];
}

std::size_t grade(const AlgebraSignature& sig, Element label) {
  if (sig.is_generator_label(label)) return 0;
  return sig.arity(sig.op_of_label(label));
}

AlgebraSignature make_tree_algebra(const FiniteQO& q,
                                   std::optional<std::size_t> max_arity,
                                   std::size_t materialized_arities) {
  const std::size_t arities = max_arity ? *max_arity : materialized_arities;
  if (arities == 0) throw DomainError("arity bound must be positive");
  const auto qs = static_cast<Element>(q.size());
  const bool fixed = max_arity.has_value();
  auto ops = FiniteQO::from_predicate(arities * qs, [&](Element a, Element b) {
    if (fixed && a / qs != b / qs) return false;
    return q.leq(a % qs, b % qs);
  });
  std::vector<std::size_t> arity;
  std::vector<std::string> gen_names, op_names;
  for (Element p = 0; p < qs; ++p) gen_names.push_back("q" + std::to_string(p));
  for (std::size_t r = 1; r <= arities; ++r) {
    for (Element p = 0; p < qs; ++p) {
      arity.push_back(r);
      op_names.push_back("o" + std::to_string(r) + "_" + std::to_string(p));
    }
  }
  return AlgebraSignature(q, std::move(ops), std::move(arity),
                          fixed ? ArityMode::Fixed : ArityMode::Free,
                          std::move(gen_names), std::move(op_names));
}

void require_graded(const AlgebraSignature& sig, const Tree& t) {
  if (!is_graded(t, sig.grades())) {
    throw DomainError("term is not graded for the signature");
  }
}

Interpretation<Tree> free_interpretation(const AlgebraSignature& sig) {
  Interpretation<Tree> interp;
  interp.generator = [&sig](Element c) { return Tree(sig.generator_label(c)); };
  interp.apply = [&sig](Element op, std::span<const Tree> args) {
    if (args.size() != sig.arity(op)) {
      throw DomainError("arity mismatch in free interpretation");
    }
    return Tree(sig.op_label(op), std::vector<Tree>(args.begin(), args.end()));
  };
  interp.leq = [&sig](const Tree& a, const Tree& b) {
    return embeds(sig.label_order(), a, b);
  };
  return interp;
}

FiniteQO min_divisibility_order(const AlgebraSignature& sig,
                                std::span<const Tree> universe) {
  const std::size_t n = universe.size();
  std::map<Tree, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    require_graded(sig, universe[i]);
    index.emplace(universe[i], i);
  }
  std::vector<std::vector<std::size_t>> kids(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const Tree& c : universe[i].children) {
      auto it = index.find(c);
      if (it == index.end()) {
        throw DomainError("universe is not closed under subterms");
      }
      kids[i].push_back(it->second);
    }
  }

  std::vector<std::uint8_t> rel(n * n, 0);
  auto at = [&](std::size_t a, std::size_t b) -> std::uint8_t& {
    return rel[a * n + b];
  };
  for (std::size_t i = 0; i < n; ++i) {
    at(i, i) = 1;
    for (std::size_t j = 0; j < n; ++j) {
      const Tree& a = universe[i];
      const Tree& b = universe[j];
      if (a.is_leaf() && b.is_leaf() &&
          sig.generators().leq(a.label, b.label)) {
        at(i, j) = 1;
      }
    }
  }

  auto args_relate = [&](std::size_t s, std::size_t t) {
    const auto& a = kids[s];
    const auto& b = kids[t];
    if (sig.mode() == ArityMode::Fixed) {
      if (a.size() != b.size()) return false;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (!at(a[i], b[i])) return false;
      return true;
    }
    return subsequence_embeds(a.size(), b.size(), [&](std::size_t i,
                                                      std::size_t j) {
      return at(a[i], b[j]) != 0;
    });
  };

  bool changed = true;
  while (changed) {
    changed = false;
    auto set = [&](std::size_t a, std::size_t b) {
      if (!at(a, b)) {
        at(a, b) = 1;
        changed = true;
      }
    };
    // divisibility
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t k : kids[u]) set(k, u);
    // compatibility
    for (std::size_t s = 0; s < n; ++s) {
      if (universe[s].is_leaf()) continue;
      const Element ls = sig.op_of_label(universe[s].label);
      for (std::size_t t = 0; t < n; ++t) {
        if (universe[t].is_leaf() || at(s, t)) continue;
        const Element lt = sig.op_of_label(universe[t].label);
        if (sig.opsyms().leq(ls, lt) && args_relate(s, t)) set(s, t);
      }
    }
    // transitivity
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t a = 0; a < n; ++a)
        if (at(a, k))
          for (std::size_t b = 0; b < n; ++b)
            if (at(k, b)) set(a, b);
  }

  return FiniteQO::from_predicate(
      n, [&](Element a, Element b) { return at(a, b) != 0; });
}

std::vector<Tree> enumerate_graded_terms(const AlgebraSignature& sig,
                                         std::size_t max_nodes) {
  std::vector<std::vector<Tree>> by_size(max_nodes + 1);
  // forests[m][r]: sequences of r graded terms of total size m
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<Tree>>>
      forests;
  std::function<const std::vector<std::vector<Tree>>&(std::size_t, std::size_t)>
      forest = [&](std::size_t m, std::size_t r)
      -> const std::vector<std::vector<Tree>>& {
    auto key = std::make_pair(m, r);
    if (auto it = forests.find(key); it != forests.end()) return it->second;
    std::vector<std::vector<Tree>> out;
    if (r == 0) {
      if (m == 0) out.emplace_back();
    } else {
      for (std::size_t k = 1; k + (r - 1) <= m; ++k) {
        const auto rests = forest(m - k, r - 1);
        for (const Tree& first : by_size[k]) {
          for (const auto& rest : rests) {
            std::vector<Tree> f{first};
            f.insert(f.end(), rest.begin(), rest.end());
            out.push_back(std::move(f));
          }
        }
      }
    }
    return forests.emplace(key, std::move(out)).first->second;
  };

  std::vector<Tree> out;
  for (std::size_t n = 1; n <= max_nodes; ++n) {
    for (Element label = 0; label < sig.label_count(); ++label) {
      const std::size_t r = grade(sig, label);
      if (r == 0) {
        if (n == 1) by_size[n].emplace_back(label);
        continue;
      }
      if (n < r + 1) continue;
      for (const auto& f : forest(n - 1, r)) by_size[n].emplace_back(label, f);
    }
    out.insert(out.end(), by_size[n].begin(), by_size[n].end());
  }
  return out;
}

}  // namespace wqo
