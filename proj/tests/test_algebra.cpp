#include <gtest/gtest.h>

#include <cstdint>

#include "wqo/algebra.hpp"
#include "wqo/errors.hpp"
#include "wqo/text.hpp"

using namespace wqo;

namespace {

// One generator, one unary op.
AlgebraSignature unary_sig() {
  return AlgebraSignature(FiniteQO::chain(1), FiniteQO::chain(1), {1}, ArityMode::Fixed,
                          {"c"}, {"la"});
}

// Two comparable generators, two comparable binary ops.
AlgebraSignature binary_sig() {
  return AlgebraSignature(FiniteQO::chain(2), FiniteQO::chain(2), {2, 2}, ArityMode::Fixed,
                          {"a", "b"}, {"mu", "nu"});
}

// Unary and binary ops, either arity mode.
AlgebraSignature mixed_sig(ArityMode mode) {
  auto ops = mode == ArityMode::Fixed ? FiniteQO::antichain(2) : FiniteQO::chain(2);
  return AlgebraSignature(FiniteQO::antichain(2), ops, {1, 2}, mode, {"a", "b"}, {"la", "mu"});
}

// Natural numbers; generator c is c+1 and every operation adds its arguments.
Interpretation<std::uint64_t> sum_interp() {
  Interpretation<std::uint64_t> in;
  in.generator = [](Element c) { return std::uint64_t{c} + 1; };
  in.apply = [](Element, std::span<const std::uint64_t> args) {
    std::uint64_t s = 0;
    for (auto a : args) s += a;
    return s;
  };
  in.leq = [](const std::uint64_t& a, const std::uint64_t& b) { return a <= b; };
  return in;
}

std::vector<std::uint64_t> values_of(const AlgebraSignature& sig,
                                     const Interpretation<std::uint64_t>& in,
                                     const std::vector<Tree>& u) {
  std::vector<std::uint64_t> out;
  for (const auto& t : u) out.push_back(phi_eval(sig, in, t));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <class V>
std::vector<std::pair<OpApplication<V>, OpApplication<V>>> all_pairs(
    const std::vector<OpApplication<V>>& apps) {
  std::vector<std::pair<OpApplication<V>, OpApplication<V>>> out;
  for (const auto& a : apps)
    for (const auto& b : apps) out.emplace_back(a, b);
  return out;
}

}  // namespace

TEST(Signature, Validation) {
  EXPECT_THROW(AlgebraSignature(FiniteQO::chain(1), FiniteQO::chain(1), {0}, ArityMode::Fixed),
               std::invalid_argument);
  EXPECT_THROW(AlgebraSignature(FiniteQO::chain(1), FiniteQO::chain(2), {1, 2}, ArityMode::Fixed),
               std::invalid_argument);
  EXPECT_NO_THROW(AlgebraSignature(FiniteQO::chain(1), FiniteQO::chain(2), {1, 2}, ArityMode::Free));
}

TEST(Grade, Examples) {
  auto sig = binary_sig();
  EXPECT_EQ(grade(sig, sig.generator_label(0)), 0u);
  EXPECT_EQ(grade(sig, sig.op_label(1)), 2u);
  EXPECT_THROW(grade(sig, 99), DomainError);
}

TEST(TreeAlgebra, Examples) {
  auto one = make_tree_algebra(FiniteQO::chain(1), 2);
  EXPECT_EQ(one.opsyms().size(), 2u);
  EXPECT_EQ(one.opsyms().relation_size(), 2u);

  auto chain = make_tree_algebra(FiniteQO::chain(2), 1);
  EXPECT_TRUE(chain.opsyms().leq(0, 1));
  EXPECT_FALSE(chain.opsyms().leq(1, 0));

  // Op (r-1)*|q| + p; in the n-ary algebra arities never compare.
  auto fixed = make_tree_algebra(FiniteQO::chain(2), 2);
  EXPECT_FALSE(fixed.opsyms().comparable(0, 3));
  auto free = make_tree_algebra(FiniteQO::chain(2), std::nullopt);
  EXPECT_EQ(free.mode(), ArityMode::Free);
  EXPECT_TRUE(free.opsyms().leq(0, 3));
}

TEST(TreeAlgebra, CompatibleOnSmallTrees) {
  for (auto max_arity : {std::optional<std::size_t>{2}, std::optional<std::size_t>{}}) {
    auto sig = make_tree_algebra(FiniteQO::chain(2), max_arity, 2);
    auto in = free_interpretation(sig);
    auto u = enumerate_graded_terms(sig, 3);
    auto apps = all_applications<Tree>(sig, u);
    std::erase_if(apps, [](const auto& a) {
      std::size_t n = 1;
      for (const auto& t : a.args) n += t.node_count();
      return n > 4;
    });
    EXPECT_TRUE(check_divisibility<Tree>(in, sig, apps));
    EXPECT_TRUE(check_compatibility<Tree>(in, sig, all_pairs(apps)));
  }
}

TEST(PhiEval, Examples) {
  auto sig = mixed_sig(ArityMode::Fixed);
  const Element a = sig.generator_label(0), b = sig.generator_label(1);
  const Element la = sig.op_label(0), mu = sig.op_label(1);

  Interpretation<std::string> show;
  show.generator = [&](Element c) { return sig.generator_names()[c]; };
  show.apply = [&](Element op, std::span<const std::string> args) {
    std::string s = sig.op_names()[op] + "(";
    for (std::size_t i = 0; i < args.size(); ++i) s += (i ? ", " : "") + args[i];
    return s + ")";
  };
  show.leq = [](const std::string&, const std::string&) { return true; };

  EXPECT_EQ(phi_eval(sig, show, Tree(a)), "a");
  EXPECT_EQ(phi_eval(sig, show, Tree(mu, {Tree(a), Tree(la, {Tree(b)})})), "mu(a, la(b))");
  EXPECT_THROW(phi_eval(sig, show, Tree(mu, {Tree(a)})), DomainError);

  auto bin = AlgebraSignature(FiniteQO::chain(1), FiniteQO::chain(1), {2}, ArityMode::Fixed);
  auto ones = sum_interp();
  const Tree c(0);
  const Tree m(1, {c, c});
  EXPECT_EQ(phi_eval(bin, ones, Tree(1, {m, m})), 4u);
}

TEST(PhiEval, FreeInterpretationIsIdentity) {
  for (auto sig : {unary_sig(), binary_sig(), mixed_sig(ArityMode::Fixed)}) {
    auto in = free_interpretation(sig);
    for (const auto& t : enumerate_graded_terms(sig, 5)) ASSERT_EQ(phi_eval(sig, in, t), t);
  }
}

TEST(Divisibility, Examples) {
  auto sig = binary_sig();
  auto in = sum_interp();
  std::vector<std::uint64_t> vals{1, 2, 3, 5};
  auto apps = all_applications<std::uint64_t>(sig, vals);
  EXPECT_TRUE(check_divisibility<std::uint64_t>(in, sig, apps));

  auto monus = in;
  monus.apply = [](Element, std::span<const std::uint64_t> a) {
    return a[0] > a[1] ? a[0] - a[1] : 0;
  };
  std::vector<OpApplication<std::uint64_t>> sample{{0, {3, 2}}};
  EXPECT_FALSE(check_divisibility<std::uint64_t>(monus, sig, sample));
  EXPECT_TRUE(check_divisibility<std::uint64_t>(monus, sig, {}));
}

TEST(Compatibility, Examples) {
  auto sig = unary_sig();
  auto in = sum_interp();
  std::vector<std::pair<OpApplication<std::uint64_t>, OpApplication<std::uint64_t>>> same{
      {{0, {4}}, {0, {4}}}};
  EXPECT_TRUE(check_compatibility<std::uint64_t>(in, sig, same));

  auto reversing = in;
  reversing.apply = [](Element, std::span<const std::uint64_t> a) { return 10 - a[0]; };
  std::vector<std::uint64_t> vals{1, 2, 3};
  auto apps = all_applications<std::uint64_t>(sig, vals);
  auto pairs = all_pairs(apps);
  auto bad = find_compatibility_violation<std::uint64_t>(reversing, sig, pairs);
  ASSERT_TRUE(bad.has_value());
  EXPECT_LT(pairs[*bad].first.args[0], pairs[*bad].second.args[0]);
}

TEST(MinDivisibilityOrder, Examples) {
  auto sig = binary_sig();
  std::vector<Tree> leaves{Tree(0), Tree(1)};
  EXPECT_EQ(min_divisibility_order(sig, leaves), FiniteQO::chain(2));

  auto un = unary_sig();
  std::vector<Tree> chain{Tree(0)};
  for (int h = 0; h < 4; ++h) chain.push_back(Tree(1, {chain.back()}));
  EXPECT_EQ(min_divisibility_order(un, chain), FiniteQO::chain(5));

  std::vector<Tree> not_closed{Tree(1, {Tree(0)})};
  EXPECT_THROW(min_divisibility_order(un, not_closed), DomainError);
}

TEST(MinDivisibilityOrder, EqualsEmbedding) {
  for (auto sig : {unary_sig(), binary_sig(), mixed_sig(ArityMode::Fixed),
                   mixed_sig(ArityMode::Free)}) {
    auto u = enumerate_graded_terms(sig, 5);
    auto rel = min_divisibility_order(sig, u);
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = 0; j < u.size(); ++j)
        ASSERT_EQ(rel.leq(static_cast<Element>(i), static_cast<Element>(j)),
                  embeds(sig.label_order(), u[i], u[j]));
  }
}

TEST(PhiEval, OrderPreservingForCheckedInterpretations) {
  for (auto sig : {unary_sig(), binary_sig(), mixed_sig(ArityMode::Fixed)}) {
    auto u = enumerate_graded_terms(sig, 5);
    auto in = sum_interp();
    auto vals = values_of(sig, in, u);
    auto apps = all_applications<std::uint64_t>(sig, vals);
    ASSERT_TRUE(check_divisibility<std::uint64_t>(in, sig, apps));
    ASSERT_TRUE(check_compatibility<std::uint64_t>(in, sig, all_pairs(apps)));
    for (const auto& t : u)
      for (const auto& s : u)
        if (embeds(sig.label_order(), t, s))
          ASSERT_LE(phi_eval(sig, in, t), phi_eval(sig, in, s));
  }
}

TEST(SignatureText, Parse) {
  auto sig = text::parse_signature(
      "# two generators\n"
      "gens: a b\n"
      "ops: mu/2 la/1 nu/2\n"
      "a <= b\n"
      "mu <= nu\n");
  EXPECT_EQ(sig.mode(), ArityMode::Fixed);
  EXPECT_EQ(sig.arity(1), 1u);
  EXPECT_TRUE(sig.generators().leq(0, 1));
  EXPECT_TRUE(sig.opsyms().leq(0, 2));
  EXPECT_THROW(text::parse_signature("gens: a\nops: mu/2 la/1\nla <= mu\n"), ParseError);
  EXPECT_NO_THROW(text::parse_signature("gens: a\nops: mu/2 la/1\nmode: free\nla <= mu\n"));
  EXPECT_THROW(text::parse_signature("gens: a\nops: mu\n"), ParseError);
  EXPECT_THROW(text::parse_signature("gens: a\nops: mu/2\na <= mu\n"), ParseError);
}
