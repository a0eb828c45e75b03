#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wqo/errors.hpp"
#include "wqo/finite_qo.hpp"
#include "wqo/tree.hpp"

namespace wqo {

/// How operation symbols of different arity relate.
///   Fixed: the order on operations only relates symbols of equal arity and
///          compatibility compares argument lists pointwise (n-ary algebras).
///   Free:  any two symbols may be related and compatibility compares
///          argument lists with Higman's order (algebras of unbounded arity).
enum class ArityMode { Fixed, Free };

/// Presentation of an ordered algebra: generators C with their order, operation
/// symbols M with their order and arities. Graded terms are trees over the
/// combined label space, generators first, then operation symbols.
class AlgebraSignature {
 public:
  AlgebraSignature(FiniteQO generators, FiniteQO opsyms,
                   std::vector<std::size_t> arity, ArityMode mode,
                   std::vector<std::string> generator_names = {},
                   std::vector<std::string> op_names = {});

  const FiniteQO& generators() const { return generators_; }
  const FiniteQO& opsyms() const { return opsyms_; }
  ArityMode mode() const { return mode_; }
  std::size_t arity(Element op) const;

  std::size_t label_count() const { return generators_.size() + opsyms_.size(); }
  Element generator_label(Element c) const;
  Element op_label(Element op) const;
  bool is_generator_label(Element label) const;
  /// Operation index of a label; throws if the label is a generator.
  Element op_of_label(Element label) const;

  /// Disjoint union of the generator and operation orders.
  const FiniteQO& label_order() const { return label_order_; }
  /// g(c) = 0 on generators, g(op) = arity(op).
  GradeMap grades() const;

  const std::vector<std::string>& generator_names() const { return gen_names_; }
  const std::vector<std::string>& op_names() const { return op_names_; }
  const std::string& label_name(Element label) const;

 private:
  FiniteQO generators_;
  FiniteQO opsyms_;
  std::vector<std::size_t> arity_;
  ArityMode mode_;
  FiniteQO label_order_;
  std::vector<std::string> gen_names_;
  std::vector<std::string> op_names_;
};

/// Grade of a label in the combined space.
std::size_t grade(const AlgebraSignature& sig, Element label);

/// The term algebra of trees over q: generators q[] and one operation
/// ⊕_{r,p}(t_1..t_r) = p[t_1..t_r] per arity r and label p, ordered by the
/// label order. With max_arity the algebra is n-ary (Fixed mode, symbols of
/// different arity incomparable). Without it the algebra has unbounded arity
/// (Free mode, arity ignored); arities 1..materialized_arities are listed.
/// Operation ⊕_{r,p} has index (r-1)*|q| + p.
AlgebraSignature make_tree_algebra(const FiniteQO& q,
                                   std::optional<std::size_t> max_arity,
                                   std::size_t materialized_arities = 4);

/// Black-box ordered algebra over carrier type V.
template <class V>
struct Interpretation {
  std::function<V(Element generator)> generator;
  std::function<V(Element op, std::span<const V> args)> apply;
  std::function<bool(const V&, const V&)> leq;
};

template <class V>
struct OpApplication {
  Element op = 0;
  std::vector<V> args;
};

/// Throws DomainError unless t is graded for sig.
void require_graded(const AlgebraSignature& sig, const Tree& t);

/// phi(c[]) = c, phi(mu[t_1..t_r]) = mu(phi(t_1), ..., phi(t_r)).
template <class V>
V phi_eval(const AlgebraSignature& sig, const Interpretation<V>& interp,
           const Tree& t) {
  require_graded(sig, t);
  std::function<V(const Tree&)> go = [&](const Tree& node) -> V {
    if (sig.is_generator_label(node.label)) {
      return interp.generator(node.label);
    }
    std::vector<V> args;
    args.reserve(node.children.size());
    for (const Tree& c : node.children) args.push_back(go(c));
    return interp.apply(sig.op_of_label(node.label), args);
  };
  return go(t);
}

namespace detail {
template <class V>
V apply_checked(const AlgebraSignature& sig, const Interpretation<V>& interp,
                const OpApplication<V>& app) {
  if (app.args.size() != sig.arity(app.op)) {
    throw DomainError("application of operation " + std::to_string(app.op) +
                      " has " + std::to_string(app.args.size()) +
                      " arguments, arity is " +
                      std::to_string(sig.arity(app.op)));
  }
  return interp.apply(app.op, app.args);
}

template <class V>
bool arguments_relate(const AlgebraSignature& sig,
                      const Interpretation<V>& interp, const std::vector<V>& a,
                      const std::vector<V>& b) {
  if (sig.mode() == ArityMode::Fixed) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!interp.leq(a[i], b[i])) return false;
    return true;
  }
  return subsequence_embeds(a.size(), b.size(), [&](std::size_t i,
                                                    std::size_t j) {
    return interp.leq(a[i], b[j]);
  });
}
}  // namespace detail

/// Index of the first sample with some argument not below the value.
template <class V>
std::optional<std::size_t> find_divisibility_violation(
    const Interpretation<V>& interp, const AlgebraSignature& sig,
    std::span<const OpApplication<V>> samples) {
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const V value = detail::apply_checked(sig, interp, samples[k]);
    for (const V& a : samples[k].args)
      if (!interp.leq(a, value)) return k;
  }
  return std::nullopt;
}

template <class V>
bool check_divisibility(const Interpretation<V>& interp,
                        const AlgebraSignature& sig,
                        std::span<const OpApplication<V>> samples) {
  return !find_divisibility_violation(interp, sig, samples).has_value();
}

/// Index of the first pair (lambda(a..), mu(b..)) with lambda below mu and the
/// arguments related whose values are not related.
template <class V>
std::optional<std::size_t> find_compatibility_violation(
    const Interpretation<V>& interp, const AlgebraSignature& sig,
    std::span<const std::pair<OpApplication<V>, OpApplication<V>>> samples) {
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const auto& [lhs, rhs] = samples[k];
    const V lv = detail::apply_checked(sig, interp, lhs);
    const V rv = detail::apply_checked(sig, interp, rhs);
    if (!sig.opsyms().leq(lhs.op, rhs.op)) continue;
    if (!detail::arguments_relate(sig, interp, lhs.args, rhs.args)) continue;
    if (!interp.leq(lv, rv)) return k;
  }
  return std::nullopt;
}

template <class V>
bool check_compatibility(
    const Interpretation<V>& interp, const AlgebraSignature& sig,
    std::span<const std::pair<OpApplication<V>, OpApplication<V>>> samples) {
  return !find_compatibility_violation(interp, sig, samples).has_value();
}

/// Every application of every operation to arguments drawn from `values`.
template <class V>
std::vector<OpApplication<V>> all_applications(const AlgebraSignature& sig,
                                               std::span<const V> values) {
  std::vector<OpApplication<V>> out;
  for (Element op = 0; op < sig.opsyms().size(); ++op) {
    const std::size_t r = sig.arity(op);
    std::vector<std::size_t> idx(r, 0);
    if (values.empty()) continue;
    while (true) {
      OpApplication<V> app{op, {}};
      for (std::size_t i : idx) app.args.push_back(values[i]);
      out.push_back(std::move(app));
      std::size_t pos = r;
      while (pos > 0 && ++idx[pos - 1] == values.size()) idx[--pos] = 0;
      if (pos == 0) break;
    }
  }
  return out;
}

/// The term model: carrier = graded terms, operations build trees, order is
/// Kruskal embedding over the signature's label order.
Interpretation<Tree> free_interpretation(const AlgebraSignature& sig);

/// Least quasi-order on a subterm-closed universe of graded terms that
/// extends the generator order on leaves and is a divisibility order
/// compatible with the operation order. Element i is universe[i].
FiniteQO min_divisibility_order(const AlgebraSignature& sig,
                                std::span<const Tree> universe);

/// All graded terms with at most max_nodes nodes, in enumerate_trees order.
std::vector<Tree> enumerate_graded_terms(const AlgebraSignature& sig,
                                         std::size_t max_nodes);

}  // namespace wqo
