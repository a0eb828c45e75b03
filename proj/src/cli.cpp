#include "wqo/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "wqo/ack_term.hpp"
#include "wqo/algebra.hpp"
#include "wqo/errors.hpp"
#include "wqo/exp_term.hpp"
#include "wqo/finite_qo.hpp"
#include "wqo/hl_dl.hpp"
#include "wqo/ordinal.hpp"
#include "wqo/text.hpp"
#include "wqo/tree.hpp"

namespace wqo::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Plain mode prints one human line per result; tsv mode prints a header and
// one tab-separated row per checked instance.
class Report {
 public:
  Report(std::ostream& os, bool tsv) : os_(os), tsv_(tsv) {}

  void columns(const std::vector<std::string>& names) {
    if (tsv_) line(names);
  }
  void row(const std::vector<std::string>& fields, const std::string& plain) {
    if (tsv_) {
      line(fields);
    } else {
      os_ << plain << "\n";
    }
  }
  // Plain-only commentary.
  void note(const std::string& plain) {
    if (!tsv_) os_ << plain << "\n";
  }

 private:
  void line(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) os_ << (i ? "\t" : "") << fields[i];
    os_ << "\n";
  }

  std::ostream& os_;
  bool tsv_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

BigInt parse_nat(const std::string& s, const std::string& what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw UsageError(what + " must be a nonnegative integer, got '" + s + "'");
  }
  return BigInt(s);
}

// Comma-separated element names; the empty string is the empty sequence.
FiniteSeq parse_names(const std::string& csv, const text::LabelTable& labels) {
  FiniteSeq out;
  if (csv.find_first_not_of(" \t") == std::string::npos) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = csv.find(',', start);
    std::string name = csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const auto b = name.find_first_not_of(" \t");
    const auto e = name.find_last_not_of(" \t");
    name = b == std::string::npos ? "" : name.substr(b, e - b + 1);
    if (!labels.contains(name)) {
      throw ParseError("unknown element '" + name + "'", 1, start + 1);
    }
    out.push_back(labels.id(name));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string join_names(const FiniteSeq& s, const text::LabelTable& labels) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + labels.name(s[i]);
  return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string opt_index(const std::optional<std::size_t>& v) {
  return v ? std::to_string(*v) : "-";
}

text::LabelTable signature_labels(const AlgebraSignature& sig) {
  std::vector<std::string> names = sig.generator_names();
  names.insert(names.end(), sig.op_names().begin(), sig.op_names().end());
  return text::LabelTable(std::move(names));
}

RelationMode parse_mode(const std::string& s) {
  return s == "literal" ? RelationMode::Literal : RelationMode::Embedding;
}

RecurrenceProfile parse_profile(const std::string& s) {
  return s == "literal" ? RecurrenceProfile::Literal : RecurrenceProfile::Repaired;
}

BoundFn parse_bound(const std::string& spec, RecurrenceProfile profile) {
  if (spec == "atr:arg") return atr_bound(AtrWiring::ArgSlot, profile);
  if (spec == "atr:base") return atr_bound(AtrWiring::BaseSlot, profile);
  if (spec.rfind("sigma:", 0) == 0) {
    const BigInt d = parse_nat(spec.substr(6), "sigma depth");
    if (d < 1 || d > 64) throw UsageError("sigma depth must be in 1..64");
    return sigma_bound(static_cast<std::uint64_t>(d));
  }
  throw UsageError("bound must be sigma:D, atr:arg or atr:base, got '" + spec + "'");
}

struct Settings {
  std::string format = "plain";
  Budget budget;

  // shared operands
  std::string qo_path, sig_path;
  std::string a, b;
  std::vector<std::string> items;
  std::size_t max_nodes = 3;
  std::optional<std::size_t> degree;
  std::uint64_t K = 1, max_M = 4;
  std::string bound = "sigma:1", mode = "embedding", profile = "repaired";
  std::optional<std::size_t> w_max_nodes;
  std::string interp = "free";
  std::size_t max_len = 8, max_n = 6, max_width = 4;
  std::uint64_t max_entry = 4, exp_bound = 4;
};

using Handler = std::function<int(const Settings&, Report&)>;

int cmd_seq_embed(const Settings& s, Report& r) {
  const auto qo = text::parse_qo(read_file(s.qo_path));
  const auto xs = parse_names(s.a, qo.labels);
  const auto ys = parse_names(s.b, qo.labels);
  const bool ok = seq_embed(qo.order, xs, ys);
  r.columns({"s", "t", "embeds"});
  r.row({join_names(xs, qo.labels), join_names(ys, qo.labels), yes_no(ok)}, yes_no(ok));
  return ok ? kAffirmative : kNegative;
}

int cmd_tree_embed(const Settings& s, Report& r) {
  const auto qo = text::parse_qo(read_file(s.qo_path));
  const Tree t = text::parse_tree(s.a, qo.labels);
  const Tree u = text::parse_tree(s.b, qo.labels);
  const bool ok = embeds(qo.order, t, u);
  r.columns({"t", "s", "embeds"});
  r.row({text::print_tree(t, qo.labels), text::print_tree(u, qo.labels), yes_no(ok)}, yes_no(ok));
  return ok ? kAffirmative : kNegative;
}

int cmd_good_pair(const Settings& s, Report& r) {
  const auto qo = text::parse_qo(read_file(s.qo_path));
  const auto xs = parse_names(s.a, qo.labels);
  const auto gp = find_good_pair(qo.order, xs);
  r.columns({"sequence", "i", "j"});
  const std::string seq = join_names(xs, qo.labels);
  if (!gp) {
    r.row({seq, "-", "-"}, "bad sequence");
    return kNegative;
  }
  r.row({seq, std::to_string(gp->first), std::to_string(gp->second)},
        std::to_string(gp->first) + " " + std::to_string(gp->second));
  return kAffirmative;
}

int cmd_hl2dl(const Settings& s, Report& r) {
  std::vector<hl::BinaryString01> xs;
  for (const auto& x : s.items) xs.push_back(hl::BinaryString01::parse(x));
  r.columns({"k", "l", "left", "right"});
  try {
    const auto [k, l] = hl::good_pair_via_dl(xs, hl::scan_dickson);
    r.row({std::to_string(k), std::to_string(l), xs[k].str(), xs[l].str()},
          std::to_string(k) + " " + std::to_string(l));
    return kAffirmative;
  } catch (const SearchExhausted&) {
    r.row({"-", "-", "-", "-"}, "exhausted");
    return kNegative;
  }
}

int cmd_dl2hl(const Settings& s, Report& r) {
  std::vector<hl::PosTuple> ts;
  for (const auto& x : s.items) ts.push_back(hl::PosTuple::parse(x));
  r.columns({"k", "l", "left", "right"});
  try {
    const auto [k, l] = hl::good_pair_via_hl(ts, hl::scan_higman);
    r.row({std::to_string(k), std::to_string(l), ts[k].str(), ts[l].str()},
          std::to_string(k) + " " + std::to_string(l));
    return kAffirmative;
  } catch (const SearchExhausted&) {
    r.row({"-", "-", "-", "-"}, "exhausted");
    return kNegative;
  }
}

int cmd_claims(const Settings& s, Report& r) {
  const auto checks = hl::run_claims(s.max_len, s.max_n, s.max_width, s.max_entry);
  r.columns({"claim", "cases", "counterexamples", "expected", "satisfied", "first_counterexample"});
  bool all = true;
  for (const auto& c : checks) {
    all = all && c.satisfied();
    std::string plain = c.name + ": " + std::to_string(c.cases) + " cases, " +
                        std::to_string(c.counterexamples) + " counterexamples, ";
    if (!c.expected) {
      plain += c.satisfied() ? "fails (expected)" : "UNEXPECTEDLY HOLDS";
    } else {
      plain += c.satisfied() ? "ok" : "FAILED";
    }
    if (c.counterexamples > 0) plain += ", first " + c.first_counterexample;
    r.row({c.name, std::to_string(c.cases), std::to_string(c.counterexamples),
           c.expected ? "holds" : "fails", yes_no(c.satisfied()),
           c.counterexamples ? c.first_counterexample : "-"},
          plain);
  }
  r.note(all ? "all claims as expected" : "some claims did not behave as expected");
  return all ? kAffirmative : kNegative;
}

int cmd_phi_eval(const Settings& s, Report& r) {
  const auto sig = text::parse_signature(read_file(s.sig_path));
  const auto labels = signature_labels(sig);
  const Tree t = text::parse_tree(s.a, labels);
  require_graded(sig, t);
  std::string value;
  if (s.interp == "free") {
    value = text::print_tree(phi_eval(sig, free_interpretation(sig), t), labels);
  } else {
    Interpretation<BigInt> sum;
    sum.generator = [](Element c) { return BigInt(c) + 1; };
    sum.apply = [](Element, std::span<const BigInt> args) {
      BigInt acc = 0;
      for (const auto& x : args) acc += x;
      return acc;
    };
    sum.leq = [](const BigInt& x, const BigInt& y) { return x <= y; };
    value = to_string(phi_eval(sig, sum, t));
  }
  r.columns({"term", "interpretation", "value"});
  r.row({text::print_tree(t, labels), s.interp, value}, value);
  return kAffirmative;
}

int cmd_min_order(const Settings& s, Report& r) {
  const auto sig = text::parse_signature(read_file(s.sig_path));
  const auto labels = signature_labels(sig);
  const auto u = enumerate_graded_terms(sig, s.max_nodes);
  check_terms(u.size() * u.size(), s.budget);
  const auto rel = min_divisibility_order(sig, u);
  r.columns({"t", "s", "min_order", "embeds"});
  std::size_t related = 0, mismatches = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < u.size(); ++j) {
      const bool m = rel.leq(static_cast<Element>(i), static_cast<Element>(j));
      const bool e = embeds(sig.label_order(), u[i], u[j]);
      related += m;
      mismatches += m != e;
      if (m || e) {
        r.row({text::print_tree(u[i], labels), text::print_tree(u[j], labels), yes_no(m), yes_no(e)},
              text::print_tree(u[i], labels) + " <= " + text::print_tree(u[j], labels) +
                  (m == e ? "" : "  (mismatch)"));
      }
    }
  }
  r.note("terms: " + std::to_string(u.size()));
  r.note("related pairs: " + std::to_string(related));
  r.note(std::string("agrees with embedding: ") + (mismatches == 0 ? "yes" : "no"));
  return mismatches == 0 ? kAffirmative : kNegative;
}

int cmd_ord_cmp(const Settings& s, Report& r) {
  const auto a = text::parse_ordinal(s.a);
  const auto b = text::parse_ordinal(s.b);
  const auto c = compare(a, b);
  const std::string v = c < 0 ? "less" : c > 0 ? "greater" : "equal";
  r.columns({"a", "b", "comparison"});
  r.row({a.str(), b.str(), v}, v);
  return kAffirmative;
}

int cmd_ord_natsum(const Settings& s, Report& r) {
  const auto a = text::parse_ordinal(s.a);
  const auto b = text::parse_ordinal(s.b);
  const auto v = natural_sum(a, b).str();
  r.columns({"a", "b", "natural_sum"});
  r.row({a.str(), b.str(), v}, v);
  return kAffirmative;
}

int cmd_ord_fs(const Settings& s, Report& r) {
  const auto a = text::parse_ordinal(s.a);
  const BigInt i = parse_nat(s.b, "index");
  const auto v = fundamental_seq(a, i).str();
  r.columns({"a", "i", "a[i]"});
  r.row({a.str(), to_string(i), v}, v);
  return kAffirmative;
}

int cmd_ord_slow(const Settings& s, Report& r) {
  const auto a = text::parse_ordinal(s.a);
  const BigInt n = parse_nat(s.b, "argument");
  const auto v = to_string(slow_growing(a, n, s.budget));
  r.columns({"a", "n", "G"});
  r.row({a.str(), to_string(n), v}, v);
  return kAffirmative;
}

int cmd_ord_maxcoef(const Settings& s, Report& r) {
  const auto a = text::parse_ordinal(s.a);
  const auto v = to_string(max_coefficient(a));
  r.columns({"a", "max_coefficient"});
  r.row({a.str(), v}, v);
  return kAffirmative;
}

int cmd_swo_check(const Settings& s, Report& r) {
  std::vector<ExpTerm> terms;
  for (const auto& x : s.items) terms.push_back(text::parse_exp(x));
  const auto v = swo_check(s.K, terms, s.budget);
  r.columns({"K", "M", "hypothesis", "violation", "j", "base"});
  const std::string M = std::to_string(terms.size() - 1);
  const std::string base = v.hypothesis_holds ? to_string(v.base) : "-";
  if (!v.hypothesis_holds) {
    r.row({std::to_string(s.K), M, "fails", opt_index(v.violation), "-", base},
          "hypothesis fails at i = " + opt_index(v.violation));
    return kAffirmative;
  }
  if (v.j) {
    r.row({std::to_string(s.K), M, "holds", "-", opt_index(v.j), base},
          "j = " + opt_index(v.j) + " at base " + base);
    return kAffirmative;
  }
  r.row({std::to_string(s.K), M, "holds", "-", "-", base}, "descending witness at base " + base);
  return kNegative;
}

int cmd_swo_search(const Settings& s, Report& r) {
  const auto res = swo_search_min_M(s.K, s.max_M, s.budget);
  r.columns({"K", "max_M", "min_M"});
  if (!res.min_M) {
    r.row({std::to_string(s.K), std::to_string(s.max_M), "-"},
          "exhausted up to M = " + std::to_string(s.max_M));
    return kNegative;
  }
  r.row({std::to_string(s.K), std::to_string(s.max_M), std::to_string(*res.min_M)},
        "M = " + std::to_string(*res.min_M));
  return kAffirmative;
}

int cmd_w_check(const Settings& s, Report& r) {
  std::vector<AckTerm> terms;
  for (const auto& x : s.items) terms.push_back(text::parse_ack(x));
  const auto profile = parse_profile(s.profile);
  const auto v = w_check(parse_bound(s.bound, profile), s.K, terms, parse_mode(s.mode), profile,
                         s.budget);
  r.columns({"K", "M", "hypothesis", "violation", "j"});
  const std::string M = std::to_string(terms.size() - 1);
  if (!v.hypothesis_holds) {
    r.row({std::to_string(s.K), M, "fails", opt_index(v.violation), "-"},
          "hypothesis fails at i = " + opt_index(v.violation));
    return kAffirmative;
  }
  if (v.j) {
    r.row({std::to_string(s.K), M, "holds", "-", opt_index(v.j)}, "j = " + opt_index(v.j));
    return kAffirmative;
  }
  r.row({std::to_string(s.K), M, "holds", "-", "-"}, "bad sequence");
  return kNegative;
}

int cmd_w_search(const Settings& s, Report& r) {
  const auto profile = parse_profile(s.profile);
  WSearchOptions opts;
  opts.mode = parse_mode(s.mode);
  opts.profile = profile;
  opts.max_nodes = s.w_max_nodes;
  const auto res = w_search_min_M(parse_bound(s.bound, profile), s.K, s.max_M, opts, s.budget);
  r.columns({"bound", "K", "max_M", "min_M", "truncated"});
  const std::string found = res.min_M ? std::to_string(*res.min_M) : "-";
  r.row({s.bound, std::to_string(s.K), std::to_string(s.max_M), found, yes_no(res.truncated)},
        res.min_M ? "M = " + found : "exhausted up to M = " + std::to_string(s.max_M));
  if (res.truncated) r.note("note: candidate universes were cut by the node cap");
  return res.min_M ? kAffirmative : kNegative;
}

template <class Items, class Show>
int list_items(Report& r, const Items& items, Show&& show) {
  r.columns({"index", "item"});
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::string s = show(items[i]);
    r.row({std::to_string(i), s}, s);
  }
  return kAffirmative;
}

int cmd_enum_tree(const Settings& s, Report& r) {
  const auto qo = text::parse_qo(read_file(s.qo_path));
  std::optional<DegreeBound> bound;
  if (s.degree) bound = DegreeBound{*s.degree};
  return list_items(r, enumerate_trees(qo.order, s.max_nodes, bound, s.budget),
                    [&](const Tree& t) { return text::print_tree(t, qo.labels); });
}

int cmd_enum_exp(const Settings& s, Report& r) {
  return list_items(r, enumerate_exp(s.exp_bound, s.budget),
                    [](const ExpTerm& e) { return e.str(); });
}

int cmd_enum_ack(const Settings& s, Report& r) {
  return list_items(r, enumerate_ack_terms(s.max_nodes, s.budget),
                    [](const AckTerm& t) { return t.str(); });
}

int cmd_enum_strings(const Settings& s, Report& r) {
  check_terms(std::uint64_t{1} << std::min<std::size_t>(s.max_len, 63), s.budget);
  return list_items(r, hl::all_strings(s.max_len),
                    [](const hl::BinaryString01& x) { return x.str(); });
}

int cmd_enum_tuples(const Settings& s, Report& r) {
  BigInt count = 1;
  for (std::size_t i = 0; i < s.max_width; ++i) {
    count *= s.max_entry;
    if (count > s.budget.max_terms) check_terms(s.budget.max_terms + 1, s.budget);
  }
  return list_items(r, hl::all_tuples(s.max_width, s.max_entry),
                    [](const hl::PosTuple& t) { return t.str(); });
}

int cmd_enum_graded(const Settings& s, Report& r) {
  const auto sig = text::parse_signature(read_file(s.sig_path));
  const auto labels = signature_labels(sig);
  return list_items(r, enumerate_graded_terms(sig, s.max_nodes),
                    [&](const Tree& t) { return text::print_tree(t, labels); });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Well-quasi-order laboratory: embeddings, ordinals and bounded searches",
               "wqolab"};
  app.require_subcommand(1);
  // Global options may also follow the verb.
  app.fallthrough();
  app.set_config("--config", "", "Read options from a file of key=value lines");
  app.add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"plain", "tsv"}))
      ->capture_default_str();
  app.add_option("--bit-budget", s.budget.max_bits, "Largest integer bit length")
      ->envname("WQO_BIT_BUDGET")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--step-budget", s.budget.max_steps, "Evaluation step limit")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-terms", s.budget.max_terms, "Largest enumerated universe")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::vector<std::pair<CLI::App*, Handler>> handlers;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc,
                  Handler h) {
    CLI::App* sub = parent->add_subcommand(name, desc);
    handlers.emplace_back(sub, std::move(h));
    return sub;
  };
  auto qo_opt = [&](CLI::App* a) {
    a->add_option("--qo", s.qo_path, "Finite order file")->required();
  };
  auto sig_opt = [&](CLI::App* a) {
    a->add_option("--sig", s.sig_path, "Signature file")->required();
  };
  auto pos_ab = [&](CLI::App* a, const std::string& na, const std::string& nb) {
    a->add_option(na, s.a)->required();
    a->add_option(nb, s.b)->required();
  };
  const auto positive = CLI::PositiveNumber;

  auto* c = leaf(&app, "seq-embed", "Higman order: does sequence S embed into T", cmd_seq_embed);
  qo_opt(c);
  pos_ab(c, "S", "T");

  c = leaf(&app, "tree-embed", "Kruskal embedding: does tree T embed into S", cmd_tree_embed);
  qo_opt(c);
  pos_ab(c, "T", "S");

  c = leaf(&app, "good-pair", "Least good pair of a finite sequence", cmd_good_pair);
  qo_opt(c);
  c->add_option("SEQ", s.a, "Comma-separated element names")->required();

  c = leaf(&app, "hl2dl", "Good pair of binary strings through Dickson's lemma", cmd_hl2dl);
  c->add_option("STRINGS", s.items)->required();

  c = leaf(&app, "dl2hl", "Good pair of tuples through Higman's lemma", cmd_dl2hl);
  c->add_option("TUPLES", s.items)->required();

  c = leaf(&app, "claims", "Check the binary-string claims on bounded universes", cmd_claims);
  c->add_option("--max-len", s.max_len)->check(positive)->capture_default_str();
  c->add_option("--max-n", s.max_n)->check(positive)->capture_default_str();
  c->add_option("--max-width", s.max_width)->check(positive)->capture_default_str();
  c->add_option("--max-entry", s.max_entry)->check(positive)->capture_default_str();

  c = leaf(&app, "phi-eval", "Evaluate a graded term in an interpretation", cmd_phi_eval);
  sig_opt(c);
  c->add_option("--interp", s.interp)
      ->check(CLI::IsMember({"free", "sum"}))
      ->capture_default_str();
  c->add_option("TERM", s.a)->required();

  c = leaf(&app, "min-order", "Least divisibility order on small graded terms", cmd_min_order);
  sig_opt(c);
  c->add_option("--max-nodes", s.max_nodes)->check(positive)->capture_default_str();

  CLI::App* ord = app.add_subcommand("ord", "Ordinals below epsilon_0");
  ord->require_subcommand(1);
  pos_ab(leaf(ord, "cmp", "Compare two ordinals", cmd_ord_cmp), "A", "B");
  pos_ab(leaf(ord, "natsum", "Natural sum", cmd_ord_natsum), "A", "B");
  pos_ab(leaf(ord, "fs", "Fundamental sequence A[I]", cmd_ord_fs), "A", "I");
  pos_ab(leaf(ord, "slow", "Slow-growing hierarchy G_A(N)", cmd_ord_slow), "A", "N");
  leaf(ord, "maxcoef", "Maximal coefficient", cmd_ord_maxcoef)->add_option("A", s.a)->required();

  CLI::App* swo = app.add_subcommand("swo", "Slow well-ordering over EXP terms");
  swo->require_subcommand(1);
  c = leaf(swo, "check", "Check one sequence a_0..a_M", cmd_swo_check);
  c->add_option("--K", s.K)->required();
  c->add_option("TERMS", s.items)->required();
  c = leaf(swo, "search", "Least M that works for every admissible sequence", cmd_swo_search);
  c->add_option("--K", s.K)->required();
  c->add_option("--max-M", s.max_M)->capture_default_str();

  CLI::App* w = app.add_subcommand("w", "W(f) over Ackermannian terms");
  w->require_subcommand(1);
  auto w_common = [&](CLI::App* a) {
    a->add_option("--bound", s.bound, "sigma:D, atr:arg or atr:base")->capture_default_str();
    a->add_option("--K", s.K)->required();
    a->add_option("--mode", s.mode)
        ->check(CLI::IsMember({"embedding", "literal"}))
        ->capture_default_str();
    a->add_option("--profile", s.profile)
        ->check(CLI::IsMember({"repaired", "literal"}))
        ->capture_default_str();
  };
  c = leaf(w, "check", "Check one sequence a_0..a_M", cmd_w_check);
  w_common(c);
  c->add_option("TERMS", s.items)->required();
  c = leaf(w, "search", "Least M that works for every admissible sequence", cmd_w_search);
  w_common(c);
  c->add_option("--max-M", s.max_M)->capture_default_str();
  c->add_option("--max-nodes", s.w_max_nodes, "Node cap on candidate terms")->check(positive);

  CLI::App* en = app.add_subcommand("enum", "List bounded universes");
  en->require_subcommand(1);
  c = leaf(en, "tree", "Trees over a finite order", cmd_enum_tree);
  qo_opt(c);
  c->add_option("--max-nodes", s.max_nodes)->check(positive)->capture_default_str();
  c->add_option("--degree", s.degree, "Branching degree bound");
  c = leaf(en, "exp", "EXP terms with value at 2 up to a bound", cmd_enum_exp);
  c->add_option("--bound", s.exp_bound)->capture_default_str();
  c = leaf(en, "ack", "Ackermannian terms by node count", cmd_enum_ack);
  c->add_option("--max-nodes", s.max_nodes)->check(positive)->capture_default_str();
  c = leaf(en, "strings", "Binary strings starting with 0", cmd_enum_strings);
  c->add_option("--max-len", s.max_len)->check(positive)->capture_default_str();
  c = leaf(en, "tuples", "Positive tuples", cmd_enum_tuples);
  c->add_option("--width", s.max_width)->check(positive)->capture_default_str();
  c->add_option("--max-entry", s.max_entry)->check(positive)->capture_default_str();
  c = leaf(en, "graded", "Graded terms of a signature", cmd_enum_graded);
  sig_opt(c);
  c->add_option("--max-nodes", s.max_nodes)->check(positive)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kAffirmative : kUsage;
  }

  const Handler* handler = nullptr;
  for (const auto& [sub, h] : handlers)
    if (sub->parsed()) handler = &h;
  if (!handler) {
    err << "no command given\n";
    return kUsage;
  }

  Report report(out, s.format == "tsv");
  try {
    return (*handler)(s, report);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsage;
}

}  // namespace wqo::cli
