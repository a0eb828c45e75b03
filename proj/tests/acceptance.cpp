// Acceptance run: one line per criterion, exit status 0 when every criterion
// passes except the known tower-bound conflict at K = 0, i = 0.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "wqo/ack_term.hpp"
#include "wqo/algebra.hpp"
#include "wqo/cli.hpp"
#include "wqo/exp_term.hpp"
#include "wqo/hl_dl.hpp"
#include "wqo/ordinal.hpp"
#include "wqo/tree.hpp"

using namespace wqo;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_s;  // 0 = no limit
  std::function<Result()> check;
  bool known_conflict = false;
};

Result fail(std::string why) { return {false, std::move(why)}; }

// Criterion 1
Result conformance_values() {
  using hl::BinaryString01;
  using hl::PosTuple;
  struct Row {
    const char* s;
    std::size_t weight;
    std::vector<std::uint64_t> tuple;
  };
  const std::vector<Row> rows{
      {"00", 1, {2}}, {"01100", 3, {1, 2, 2}}, {"011011100", 5, {1, 2, 1, 3, 2}}};
  for (const auto& r : rows) {
    const auto w = BinaryString01::parse(r.s);
    if (hl::weight(w) != r.weight) return fail(std::string("weight of ") + r.s);
    if (hl::to_tuple(w) != PosTuple(r.tuple)) return fail(std::string("tuple of ") + r.s);
  }
  return {true, "3 weights, 3 tuples exact"};
}

// Criterion 2
Result claims_suite() {
  const auto checks = hl::run_claims(8, 6);
  std::uint64_t cases = 0;
  bool witness = false;
  for (const auto& c : checks) {
    cases += c.cases;
    if (!c.satisfied()) return fail(c.name + " first counterexample " + c.first_counterexample);
    if (c.name == "claim2-recorded-witness") witness = c.first_counterexample == "u=00 n=3 -> 0010";
  }
  if (!witness) return fail("recorded length witness not reproduced");
  return {true, std::to_string(checks.size()) + " suites, " + std::to_string(cases) +
                    " cases; length bullet fails as documented (u=00 n=3 -> 0010)"};
}

// Criterion 3
Result tree_oracle() {
  std::size_t pairs = 0;
  for (const auto& [name, order] :
       {std::pair{"equality", FiniteQO::antichain(2)}, std::pair{"chain", FiniteQO::chain(2)}}) {
    const auto u = enumerate_trees(order, 6);
    const auto rel = oracle::tree_closure(order, u);
    for (std::size_t t = 0; t < u.size(); ++t)
      for (std::size_t s = 0; s < u.size(); ++s) {
        ++pairs;
        if (embeds(order, u[t], u[s]) != rel[t][s])
          return fail(std::string(name) + " order: mismatch at pair " + std::to_string(t) + "," +
                      std::to_string(s));
      }
  }
  return {true, std::to_string(pairs) + " pairs, 0 mismatches"};
}

AlgebraSignature unary_sig() {
  return AlgebraSignature(FiniteQO::chain(1), FiniteQO::chain(1), {1}, ArityMode::Fixed, {"c"},
                          {"la"});
}
AlgebraSignature binary_sig() {
  return AlgebraSignature(FiniteQO::chain(2), FiniteQO::chain(2), {2, 2}, ArityMode::Fixed,
                          {"a", "b"}, {"mu", "nu"});
}
AlgebraSignature mixed_sig(ArityMode mode) {
  auto ops = mode == ArityMode::Fixed ? FiniteQO::antichain(2) : FiniteQO::chain(2);
  return AlgebraSignature(FiniteQO::antichain(2), ops, {1, 2}, mode, {"a", "b"}, {"la", "mu"});
}
std::vector<AlgebraSignature> signatures() {
  return {unary_sig(), binary_sig(), mixed_sig(ArityMode::Fixed), mixed_sig(ArityMode::Free)};
}

// Criterion 4
Result bridge_fixpoint() {
  std::size_t pairs = 0;
  for (const auto& sig : signatures()) {
    const auto u = enumerate_graded_terms(sig, 5);
    const auto rel = min_divisibility_order(sig, u);
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = 0; j < u.size(); ++j) {
        ++pairs;
        if (rel.leq(static_cast<Element>(i), static_cast<Element>(j)) !=
            embeds(sig.label_order(), u[i], u[j]))
          return fail("mismatch at pair " + std::to_string(i) + "," + std::to_string(j));
      }
  }
  return {true, "4 signatures, " + std::to_string(pairs) + " pairs, 0 mismatches"};
}

// Criterion 5
Result phi_preserves_order() {
  Interpretation<std::uint64_t> sum;
  sum.generator = [](Element c) { return std::uint64_t{c} + 1; };
  sum.apply = [](Element, std::span<const std::uint64_t> args) {
    std::uint64_t s = 0;
    for (auto a : args) s += a;
    return s;
  };
  sum.leq = [](const std::uint64_t& a, const std::uint64_t& b) { return a <= b; };

  std::size_t checked = 0;
  for (const auto& sig : signatures()) {
    const auto u = enumerate_graded_terms(sig, 5);
    std::vector<std::uint64_t> vals;
    for (const auto& t : u) vals.push_back(phi_eval(sig, sum, t));
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    const auto apps = all_applications<std::uint64_t>(sig, vals);
    std::vector<std::pair<OpApplication<std::uint64_t>, OpApplication<std::uint64_t>>> app_pairs;
    for (const auto& a : apps)
      for (const auto& b : apps) app_pairs.emplace_back(a, b);
    if (!check_divisibility<std::uint64_t>(sum, sig, apps)) return fail("sum not divisible");
    if (!check_compatibility<std::uint64_t>(sum, sig, app_pairs)) return fail("sum not compatible");

    const auto free = free_interpretation(sig);
    for (const auto& t : u)
      for (const auto& s : u) {
        if (!embeds(sig.label_order(), t, s)) continue;
        ++checked;
        if (phi_eval(sig, sum, t) > phi_eval(sig, sum, s)) return fail("sum interpretation");
        if (!free.leq(phi_eval(sig, free, t), phi_eval(sig, free, s)))
          return fail("free interpretation");
      }
  }
  return {true, std::to_string(checked) + " related pairs x 2 interpretations, 0 violations"};
}

// Criterion 6
Result hierarchy_identity() {
  std::size_t n = 0, unfolded = 0;
  for (const auto& e : enumerate_exp(16)) {
    const Ordinal a = to_ordinal(e);
    for (int k = 2; k <= 4; ++k) {
      const BigInt v = eval_at(e, k);
      if (slow_growing(a, k) != v) return fail("G differs from evaluation for " + e.str());
      if (v <= 5000) {
        ++unfolded;
        if (oracle::slow_growing_unfold(a, k) != v) return fail("unfolding differs for " + e.str());
      }
      ++n;
    }
  }
  return {true, std::to_string(n) + " (term, base) points exact; " + std::to_string(unfolded) +
                    " also by unfolding"};
}

// Criterion 7
Result coefficient_bound() {
  std::size_t n = 0;
  for (const auto& e : enumerate_exp(16)) {
    ++n;
    if (max_coefficient(to_ordinal(e)) > eval_at(e, 2)) return fail("bound fails for " + e.str());
  }
  return {true, std::to_string(n) + " terms, 0 violations"};
}

// Criterion 8
Result tower_bound() {
  const Budget budget;
  std::vector<std::string> bad;
  int points = 0;
  for (std::uint64_t K = 0; K <= 3; ++K)
    for (std::uint64_t i = 0; i <= 4; ++i) {
      ++points;
      const BigInt g = slow_growing(omega_tower(K), i, budget);
      const BigInt t = two_tower(K, i, budget);
      if (g > t) {
        bad.push_back("K=" + std::to_string(K) + " i=" + std::to_string(i) + ": G=" +
                      to_string(g) + " > " + to_string(t));
      }
    }
  if (bad.empty()) return {true, std::to_string(points) + " points"};
  std::string d = std::to_string(bad.size()) + " of " + std::to_string(points) + " points fail (";
  for (std::size_t i = 0; i < bad.size(); ++i) d += (i ? "; " : "") + bad[i];
  return fail(d + "); w_0 = 1 while 2_0(0) = 0, every point with i > 0 holds");
}

// Criterion 9
Result swo_search() {
  const auto k0 = swo_search_min_M(0, 4);
  if (k0.min_M != std::optional<std::uint64_t>{1}) return fail("K=0 did not give M = 1");
  const std::uint64_t frozen = 2;  // fixed by the exhaustive oracle
  const auto brute = oracle::swo_brute_min_M(1, 3);
  if (brute != std::optional<std::uint64_t>{frozen}) return fail("oracle no longer gives 2");
  const auto a = swo_search_min_M(1, 4);
  const auto b = swo_search_min_M(1, 4);
  if (a.min_M != std::optional<std::uint64_t>{frozen}) return fail("K=1 differs from frozen value");
  if (b.min_M != a.min_M || b.longest_descent != a.longest_descent) return fail("rerun differs");
  return {true, "K=0 -> M = 1, K=1 -> M = 2 (oracle-frozen, rerun identical)"};
}

// Criterion 10
Result leqk_oracle() {
  const auto u = enumerate_ack_terms(5);
  std::size_t pairs = 0;
  for (auto mode : {RelationMode::Literal, RelationMode::Embedding}) {
    const bool cong = mode == RelationMode::Embedding;
    const auto rel = oracle::ack_closure(u, cong);
    for (std::size_t s = 0; s < u.size(); ++s)
      for (std::size_t t = 0; t < u.size(); ++t) {
        ++pairs;
        const bool got = leq_k(mode, u[s], u[t]);
        if (got != rel[s][t]) return fail("mismatch " + u[s].str() + " " + u[t].str());
        if (!cong && got != u[s].is_one())
          return fail("literal relation not degenerate at " + u[s].str());
      }
  }
  return {true, std::to_string(pairs) + " pairs, 0 mismatches; literal mode relates only 1"};
}

// Criterion 11
Result translations() {
  std::mt19937 rng(20240601);
  std::bernoulli_distribution bit(0.5);
  std::uniform_int_distribution<std::size_t> len(1, 7), count(2, 40), width(1, 4);
  std::uniform_int_distribution<std::uint64_t> entry(1, 6);
  for (int round = 0; round < 100; ++round) {
    std::vector<hl::BinaryString01> xs;
    const std::size_t n = count(rng) + 40;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::uint8_t> letters(len(rng), 0);
      for (std::size_t j = 1; j < letters.size(); ++j) letters[j] = bit(rng);
      xs.emplace_back(std::move(letters));
    }
    const auto [k, l] = hl::good_pair_via_dl(xs, hl::scan_dickson);
    if (!(k < l && l < xs.size() && hl::subseq_embed(xs[k], xs[l])))
      return fail("invalid string pair in round " + std::to_string(round));
  }
  for (int round = 0; round < 100; ++round) {
    const std::size_t w = width(rng);
    std::vector<hl::PosTuple> ts;
    const std::size_t n = count(rng) + 40;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::uint64_t> e(w);
      for (auto& x : e) x = entry(rng);
      ts.emplace_back(std::move(e));
    }
    const auto [k, l] = hl::good_pair_via_hl(ts, hl::scan_higman);
    if (!(k < l && l < ts.size() && hl::tuple_leq(ts[k], ts[l])))
      return fail("invalid tuple pair in round " + std::to_string(round));
  }
  return {true, "100 string and 100 tuple sequences, all pairs verified"};
}

// Criterion 12
Result determinism() {
  const std::string d = WQO_DATA_DIR;
  const std::vector<std::vector<std::string>> commands{
      {"seq-embed", "--qo", d + "/chain2.qo", "a,b", "a,a,b"},
      {"tree-embed", "--qo", d + "/chain2.qo", "a[b]", "b[a[b]]"},
      {"good-pair", "--qo", d + "/antichain3.qo", "a,b,c,b"},
      {"hl2dl", "01", "0011", "0"},
      {"dl2hl", "(2,1)", "(1,2)", "(3,3)"},
      {"claims", "--max-len", "8"},
      {"phi-eval", "--sig", d + "/mixed.sig", "--interp", "sum", "mu[a,la[b]]"},
      {"min-order", "--sig", d + "/mixed.sig", "--max-nodes", "4"},
      {"ord", "cmp", "w", "w*1+1"},
      {"ord", "natsum", "w^(2)+w", "w*2"},
      {"ord", "fs", "w^(w)", "3"},
      {"ord", "slow", "w^(w)", "3"},
      {"ord", "maxcoef", "w^(2)*3+w*5"},
      {"swo", "check", "--K", "1", "x^(0)+(0)", "0"},
      {"swo", "search", "--K", "1", "--max-M", "4"},
      {"w", "check", "--K", "1", "1", "1"},
      {"w", "search", "--K", "1", "--max-M", "3"},
      {"enum", "tree", "--qo", d + "/chain2.qo", "--max-nodes", "3"},
      {"enum", "exp", "--bound", "8"},
      {"enum", "ack", "--max-nodes", "4"},
      {"enum", "strings", "--max-len", "4"},
      {"enum", "tuples", "--width", "2", "--max-entry", "3"},
      {"enum", "graded", "--sig", d + "/mixed.sig", "--max-nodes", "3"},
      {"--format", "tsv", "claims", "--max-len", "6"},
      {"--format", "tsv", "w", "search", "--K", "1", "--max-M", "3"},
      {"ord", "cmp", "w+", "1"},
      {"--max-terms", "10", "enum", "exp", "--bound", "8"},
  };
  for (const auto& cmd : commands) {
    std::string first;
    for (int rep = 0; rep < 3; ++rep) {
      std::ostringstream out, err;
      const int code = cli::run(cmd, out, err);
      const std::string all = std::to_string(code) + "\n" + out.str() + "\x1f" + err.str();
      if (rep == 0) {
        first = all;
      } else if (all != first) {
        return fail("output changed for '" + cmd[0] + "'");
      }
    }
  }
  return {true, std::to_string(commands.size()) + " commands x 3 runs byte-identical"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "reference value conformance", 1, conformance_values},
      {2, "claims property suite", 30, claims_suite},
      {3, "tree embedding vs closure oracle", 60, tree_oracle},
      {4, "bridge fixpoint", 60, bridge_fixpoint},
      {5, "phi order preservation", 30, phi_preserves_order},
      {6, "hierarchy identity", 30, hierarchy_identity},
      {7, "coefficient bound", 0, coefficient_bound},
      {8, "tower bound", 0, tower_bound, true},
      {9, "SWO desk-scale search", 300, swo_search},
      {10, "leq_k vs closure oracle", 60, leqk_oracle},
      {11, "HL/DL translations", 30, translations},
      {12, "CLI determinism", 0, determinism},
  };

  bool ok = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.check();
    } catch (const std::exception& e) {
      r = fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.pass && c.limit_s > 0 && secs > c.limit_s) {
      r = fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_s) + " s");
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << c.id << ". " << c.title << " [" << timing
              << "]: " << r.detail;
    if (!r.pass && c.known_conflict) std::cout << " (known conflict, see README)";
    std::cout << "\n";
    if (!r.pass && !c.known_conflict) ok = false;
  }
  return ok ? 0 : 1;
}
