#include "wqo/text.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "wqo/errors.hpp"

namespace wqo::text {

LabelTable::LabelTable(std::vector<std::string> names) {
  for (auto& n : names) {
    if (contains(n)) throw DomainError("duplicate label '" + n + "'");
    names_.push_back(std::move(n));
  }
}

Element LabelTable::intern(std::string_view name) {
  for (Element i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  names_.emplace_back(name);
  return static_cast<Element>(names_.size() - 1);
}

Element LabelTable::id(std::string_view name) const {
  for (Element i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  throw DomainError("unknown label '" + std::string(name) + "'");
}

bool LabelTable::contains(std::string_view name) const {
  for (const auto& n : names_)
    if (n == name) return true;
  return false;
}

const std::string& LabelTable::name(Element e) const {
  if (e >= names_.size()) throw DomainError("no name for element " + std::to_string(e));
  return names_[e];
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text, std::size_t line = 1)
      : text_(text), line_(line) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      advance();
    }
  }
  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) != token) return false;
    for (std::size_t i = 0; i < token.size(); ++i) advance();
    return true;
  }
  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }
  std::string ident() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
      advance();
    }
    if (start == pos_) fail("expected identifier");
    return std::string(text_.substr(start, pos_ - start));
  }
  BigInt posint() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      advance();
    }
    if (start == pos_) fail("expected positive integer");
    BigInt v(std::string(text_.substr(start, pos_ - start)));
    if (v == 0) fail("expected positive integer");
    return v;
  }
  void finish() {
    if (!at_end()) fail("unexpected trailing input");
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, column_);
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

template <class Resolve>
Tree tree_rec(Cursor& c, Resolve& resolve) {
  Tree t(resolve(c, c.ident()));
  if (c.accept("[")) {
    if (!c.accept("]")) {
      do {
        t.children.push_back(tree_rec(c, resolve));
      } while (c.accept(","));
      c.expect("]");
    }
  }
  return t;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::string_view strip_comment(std::string_view line) {
  if (auto p = line.find('#'); p != std::string_view::npos) line = line.substr(0, p);
  return line;
}

bool blank(std::string_view s) {
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  return true;
}

struct Line {
  std::string_view body;
  std::size_t number;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 1;
  while (true) {
    const auto nl = text.find('\n');
    std::string_view line = strip_comment(text.substr(0, nl));
    if (!blank(line)) out.push_back({line, number});
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
    ++number;
  }
  return out;
}

// "key: rest" -> rest when the line starts with key.
bool header(std::string_view line, std::string_view key, std::string_view& rest) {
  std::size_t i = 0;
  while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
  if (line.substr(i, key.size()) != key) return false;
  i += key.size();
  while (i < line.size() && line[i] == ' ') ++i;
  if (i >= line.size() || line[i] != ':') return false;
  rest = line.substr(i + 1);
  return true;
}

std::pair<std::string, std::string> relation_line(const Line& line) {
  Cursor c(line.body, line.number);
  std::string a = c.ident();
  c.expect("<=");
  std::string b = c.ident();
  c.finish();
  return {a, b};
}

}  // namespace

NamedQO parse_qo(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("missing 'elements:' header", 1, 1);
  std::string_view rest;
  if (!header(lines[0].body, "elements", rest)) {
    throw ParseError("first line must be 'elements: ...'", lines[0].number, 1);
  }
  NamedQO out;
  for (const auto& name : split_ws(rest)) {
    if (out.labels.contains(name)) {
      throw ParseError("duplicate element '" + name + "'", lines[0].number, 1);
    }
    out.labels.intern(name);
  }
  std::vector<std::pair<Element, Element>> pairs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto [a, b] = relation_line(lines[i]);
    if (!out.labels.contains(a) || !out.labels.contains(b)) {
      throw ParseError("undeclared element in '" + a + " <= " + b + "'",
                       lines[i].number, 1);
    }
    pairs.emplace_back(out.labels.id(a), out.labels.id(b));
  }
  try {
    out.order = FiniteQO::from_pairs(out.labels.size(), pairs);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), lines.back().number, 1);
  }
  return out;
}

std::string print_qo(const NamedQO& qo) {
  std::string out = "elements:";
  for (const auto& n : qo.labels.names()) out += " " + n;
  out += "\n";
  for (auto [a, b] : qo.order.pairs()) {
    if (a == b) continue;
    out += qo.labels.name(a) + " <= " + qo.labels.name(b) + "\n";
  }
  return out;
}

Tree parse_tree(std::string_view text, LabelTable& labels) {
  Cursor c(text);
  auto resolve = [&](Cursor&, const std::string& name) { return labels.intern(name); };
  Tree t = tree_rec(c, resolve);
  c.finish();
  return t;
}

Tree parse_tree(std::string_view text, const LabelTable& labels) {
  Cursor c(text);
  auto resolve = [&](Cursor& cur, const std::string& name) {
    if (!labels.contains(name)) cur.fail("unknown label '" + name + "'");
    return labels.id(name);
  };
  Tree t = tree_rec(c, resolve);
  c.finish();
  return t;
}

std::string print_tree(const Tree& t, const LabelTable& labels) {
  std::string out = labels.name(t.label) + "[";
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i) out += ",";
    out += print_tree(t.children[i], labels);
  }
  return out + "]";
}

namespace {

Ordinal ordinal_rec(Cursor& c) {
  if (c.peek() == '0') {
    c.expect("0");
    return Ordinal::zero();
  }
  std::vector<Ordinal::Summand> out;
  do {
    Ordinal::Summand s;
    if (c.accept("w")) {
      s.exponent = Ordinal::finite(1);
      if (c.accept("^")) {
        c.expect("(");
        s.exponent = ordinal_rec(c);
        c.expect(")");
      }
      s.coefficient = c.accept("*") ? c.posint() : BigInt(1);
    } else {
      s.coefficient = c.posint();
    }
    if (!out.empty()) {
      const auto cmp = compare(s.exponent, out.back().exponent);
      if (cmp > 0) c.fail("summands are not in Cantor normal form");
      if (cmp == 0) {
        out.back().coefficient += s.coefficient;
        continue;
      }
    }
    out.push_back(std::move(s));
  } while (c.accept("+"));
  return Ordinal::from_summands(std::move(out));
}

ExpTerm exp_rec(Cursor& c) {
  if (c.accept("0")) return ExpTerm::zero();
  c.expect("x^(");
  ExpTerm e = exp_rec(c);
  c.expect(")+(");
  ExpTerm r = exp_rec(c);
  c.expect(")");
  return ExpTerm::node(std::move(e), std::move(r));
}

AckTerm ack_rec(Cursor& c) {
  if (c.accept("1")) return AckTerm::one();
  if (c.accept("A(")) {
    AckTerm a = ack_rec(c);
    c.expect(",");
    AckTerm b = ack_rec(c);
    c.expect(")");
    return AckTerm::app(std::move(a), std::move(b));
  }
  c.expect("(");
  AckTerm a = ack_rec(c);
  c.expect("+");
  AckTerm b = ack_rec(c);
  c.expect(")");
  return AckTerm::plus(std::move(a), std::move(b));
}

}  // namespace

Ordinal parse_ordinal(std::string_view text) {
  Cursor c(text);
  Ordinal o = ordinal_rec(c);
  c.finish();
  return o;
}

ExpTerm parse_exp(std::string_view text) {
  Cursor c(text);
  ExpTerm e = exp_rec(c);
  c.finish();
  return e;
}

AckTerm parse_ack(std::string_view text) {
  Cursor c(text);
  AckTerm t = ack_rec(c);
  c.finish();
  return t;
}

AlgebraSignature parse_signature(std::string_view text) {
  LabelTable gens, ops;
  std::vector<std::size_t> arity;
  ArityMode mode = ArityMode::Fixed;
  std::vector<std::pair<Element, Element>> gen_pairs, op_pairs;
  bool saw_gens = false, saw_ops = false;
  std::size_t last_line = 1;
  for (const Line& line : content_lines(text)) {
    last_line = line.number;
    std::string_view rest;
    if (header(line.body, "gens", rest)) {
      saw_gens = true;
      for (const auto& g : split_ws(rest)) {
        if (gens.contains(g)) throw ParseError("duplicate generator '" + g + "'", line.number, 1);
        gens.intern(g);
      }
    } else if (header(line.body, "ops", rest)) {
      saw_ops = true;
      for (const auto& spec : split_ws(rest)) {
        const auto slash = spec.find('/');
        if (slash == std::string::npos) {
          throw ParseError("operation '" + spec + "' needs an arity", line.number, 1);
        }
        const std::string name = spec.substr(0, slash);
        std::size_t a = 0;
        const auto tail = std::string_view(spec).substr(slash + 1);
        auto [p, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), a);
        if (ec != std::errc() || p != tail.data() + tail.size() || a == 0) {
          throw ParseError("bad arity in '" + spec + "'", line.number, 1);
        }
        if (ops.contains(name) || gens.contains(name)) {
          throw ParseError("duplicate symbol '" + name + "'", line.number, 1);
        }
        ops.intern(name);
        arity.push_back(a);
      }
    } else if (header(line.body, "mode", rest)) {
      const auto words = split_ws(rest);
      if (words.size() == 1 && words[0] == "fixed") {
        mode = ArityMode::Fixed;
      } else if (words.size() == 1 && words[0] == "free") {
        mode = ArityMode::Free;
      } else {
        throw ParseError("mode must be 'fixed' or 'free'", line.number, 1);
      }
    } else {
      auto [a, b] = relation_line(line);
      if (gens.contains(a) && gens.contains(b)) {
        gen_pairs.emplace_back(gens.id(a), gens.id(b));
      } else if (ops.contains(a) && ops.contains(b)) {
        op_pairs.emplace_back(ops.id(a), ops.id(b));
      } else {
        throw ParseError("'" + a + " <= " + b +
                             "' must relate two generators or two operations",
                         line.number, 1);
      }
    }
  }
  if (!saw_gens || !saw_ops) throw ParseError("signature needs 'gens:' and 'ops:' lines", 1, 1);
  for (const auto& g : gens.names()) {
    if (ops.contains(g)) throw ParseError("symbol '" + g + "' is both generator and operation", 1, 1);
  }
  try {
    return AlgebraSignature(FiniteQO::from_pairs(gens.size(), gen_pairs),
                            FiniteQO::from_pairs(ops.size(), op_pairs),
                            std::move(arity), mode, gens.names(), ops.names());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), last_line, 1);
  }
}

}  // namespace wqo::text
