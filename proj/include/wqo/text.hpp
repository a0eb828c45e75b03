#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wqo/ack_term.hpp"
#include "wqo/algebra.hpp"
#include "wqo/exp_term.hpp"
#include "wqo/finite_qo.hpp"
#include "wqo/ordinal.hpp"
#include "wqo/tree.hpp"

// Text formats. Parsers skip whitespace between tokens and throw ParseError
// with a 1-based line and column; printers emit the canonical form.
namespace wqo::text {

/// Element names for a finite order; identifier i is names[i].
class LabelTable {
 public:
  LabelTable() = default;
  explicit LabelTable(std::vector<std::string> names);

  /// Identifier of name, adding it when absent.
  Element intern(std::string_view name);
  /// Identifier of name; throws DomainError when absent.
  Element id(std::string_view name) const;
  bool contains(std::string_view name) const;
  const std::string& name(Element e) const;
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
};

struct NamedQO {
  FiniteQO order;
  LabelTable labels;
};

/// Finite order file:
///   elements: a b c
///   a <= b
///   b <= c
/// '#' starts a comment. Reflexive pairs are implicit; the listed relation
/// must already be transitive.
NamedQO parse_qo(std::string_view text);
std::string print_qo(const NamedQO& qo);

/// tree := ident | ident '[' (tree (',' tree)*)? ']'
/// Unknown labels are interned into `labels`.
Tree parse_tree(std::string_view text, LabelTable& labels);
/// Unknown labels are a ParseError.
Tree parse_tree(std::string_view text, const LabelTable& labels);
std::string print_tree(const Tree& t, const LabelTable& labels);

/// ord := '0' | sum ; sum := term ('+' term)* ;
/// term := posint | 'w' ('^' '(' ord ')')? ('*' posint)?
/// Summands must appear with non-increasing exponents; equal neighbours merge.
Ordinal parse_ordinal(std::string_view text);

/// exp := '0' | 'x^(' exp ')+(' exp ')'
ExpTerm parse_exp(std::string_view text);

/// t := '1' | '(' t '+' t ')' | 'A(' t ',' t ')'
AckTerm parse_ack(std::string_view text);

/// Signature file:
///   gens: a b
///   ops: mu/2 la/1
///   mode: fixed        (or free; default fixed)
///   a <= b
///   la <= mu
AlgebraSignature parse_signature(std::string_view text);

}  // namespace wqo::text
