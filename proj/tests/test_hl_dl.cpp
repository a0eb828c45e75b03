#include <gtest/gtest.h>

#include <random>

#include "wqo/errors.hpp"
#include "wqo/hl_dl.hpp"

using namespace wqo;
using namespace wqo::hl;

namespace {

BinaryString01 S(const char* s) { return BinaryString01::parse(s); }
PosTuple T(std::vector<std::uint64_t> v) { return PosTuple(std::move(v)); }

BinaryString01 random_string(std::mt19937& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(1, max_len);
  std::bernoulli_distribution bit(0.5);
  std::vector<std::uint8_t> letters(len(rng), 0);
  for (std::size_t i = 1; i < letters.size(); ++i) letters[i] = bit(rng);
  return BinaryString01(std::move(letters));
}

}  // namespace

TEST(Strings, Validation) {
  EXPECT_THROW(S("10"), ParseError);
  EXPECT_THROW(S(""), ParseError);
  EXPECT_THROW(S("0a"), ParseError);
  EXPECT_THROW(BinaryString01({1}), DomainError);
  EXPECT_THROW(T({1, 0}), DomainError);
  EXPECT_EQ(PosTuple::parse("(1, 2,3)"), T({1, 2, 3}));
  EXPECT_EQ(PosTuple::parse("4"), T({4}));
  EXPECT_THROW(PosTuple::parse("(1,0)"), ParseError);
  EXPECT_EQ(T({1, 2}).str(), "(1,2)");
}

TEST(LastLetter, Examples) {
  EXPECT_EQ(last_letter(S("0")), 0);
  EXPECT_EQ(last_letter(S("01")), 1);
  EXPECT_EQ(last_letter(S("0110")), 0);
}

TEST(Weight, Examples) {
  EXPECT_EQ(weight(S("00")), 1u);
  EXPECT_EQ(weight(S("01100")), 3u);
  EXPECT_EQ(weight(S("011011100")), 5u);
}

TEST(ToTuple, Examples) {
  EXPECT_EQ(to_tuple(S("00")), T({2}));
  EXPECT_EQ(to_tuple(S("01100")), T({1, 2, 2}));
  EXPECT_EQ(to_tuple(S("011011100")), T({1, 2, 1, 3, 2}));
}

TEST(FromTuple, Examples) {
  EXPECT_EQ(from_tuple(T({2})), S("00"));
  EXPECT_EQ(from_tuple(T({1, 2})), S("011"));
  EXPECT_EQ(from_tuple(T({1, 2, 2})), S("01100"));
}

TEST(Normalize, Examples) {
  EXPECT_EQ(normalize(T({1, 2}), 3), T({1, 2, 1}));
  EXPECT_EQ(normalize(T({1, 2, 2}), 2), T({1, 2}));
  EXPECT_EQ(normalize(T({1, 2, 2}), 3), T({1, 2, 2}));
}

TEST(Bang, Examples) {
  EXPECT_EQ(bang(S("01100"), 3), S("01100"));
  EXPECT_EQ(bang(S("01100"), 2), S("011"));
  EXPECT_EQ(bang(S("00"), 3), S("0010"));
}

TEST(SubseqEmbed, Examples) {
  EXPECT_TRUE(subseq_embed(S("0110"), S("0110")));
  EXPECT_TRUE(subseq_embed(S("00"), S("01100")));
  EXPECT_FALSE(subseq_embed(S("011"), S("000")));
}

TEST(AlternatingWord, Shape) {
  EXPECT_EQ(alternating_word(3), S("010101"));
  EXPECT_EQ(weight(alternating_word(4)), 8u);
}

TEST(Claims, SuiteAtLengthEight) {
  const auto checks = run_claims(8, 6);
  ASSERT_FALSE(checks.empty());
  for (const auto& c : checks) {
    EXPECT_TRUE(c.satisfied()) << c.name << ": " << c.first_counterexample;
    EXPECT_GT(c.cases, 0u) << c.name;
  }
}

TEST(Claims, PrintedLengthStatementFails) {
  for (const auto& c : run_claims(8, 6)) {
    if (c.name == "claim2-length-preserved") {
      EXPECT_FALSE(c.expected);
      EXPECT_EQ(c.first_counterexample, "u=0 n=2 -> 01");
    }
    if (c.name == "claim2-recorded-witness") {
      EXPECT_EQ(c.counterexamples, 1u);
      EXPECT_EQ(c.first_counterexample, "u=00 n=3 -> 0010");
    }
  }
}

TEST(Claims, Claim2AtLengthTen) {
  for (const auto& c : run_claims(10, 6, 1, 1))
    EXPECT_TRUE(c.satisfied()) << c.name << ": " << c.first_counterexample;
}

TEST(GoodPairViaDl, Examples) {
  std::vector<BinaryString01> constant{S("0110"), S("0110"), S("0110")};
  EXPECT_EQ(good_pair_via_dl(constant, scan_dickson), IndexPair(0, 1));
  std::vector<BinaryString01> xs{S("0"), S("01"), S("0")};
  const auto [k, l] = good_pair_via_dl(xs, scan_dickson);
  EXPECT_TRUE(subseq_embed(xs[k], xs[l]));
  std::vector<BinaryString01> one{S("0")};
  EXPECT_THROW(good_pair_via_dl(one, scan_dickson), SearchExhausted);
}

TEST(GoodPairViaDl, RandomSequences) {
  std::mt19937 rng(2024);
  for (int round = 0; round < 100; ++round) {
    std::vector<BinaryString01> xs;
    for (int i = 0; i < 40; ++i) xs.push_back(random_string(rng, 6));
    const auto [k, l] = good_pair_via_dl(xs, scan_dickson);
    ASSERT_LT(k, l);
    ASSERT_TRUE(subseq_embed(xs[k], xs[l]));
  }
}

TEST(GoodPairViaHl, Examples) {
  std::vector<PosTuple> constant{T({2, 1}), T({2, 1})};
  EXPECT_EQ(good_pair_via_hl(constant, scan_higman), IndexPair(0, 1));
  std::vector<PosTuple> ts{T({2, 1}), T({1, 1}), T({1, 2}), T({2, 2})};
  const auto [k, l] = good_pair_via_hl(ts, scan_higman);
  EXPECT_TRUE(tuple_leq(ts[k], ts[l]));
  std::vector<PosTuple> down{T({3}), T({2}), T({1}), T({1})};
  EXPECT_EQ(good_pair_via_hl(down, scan_higman), IndexPair(2, 3));
  std::vector<PosTuple> mixed{T({1}), T({1, 1})};
  EXPECT_THROW(good_pair_via_hl(mixed, scan_higman), DomainError);
}

TEST(GoodPairViaHl, RandomSequences) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<std::uint64_t> entry(1, 5);
  for (int round = 0; round < 100; ++round) {
    const std::size_t width = 1 + round % 3;
    std::vector<PosTuple> ts;
    for (int i = 0; i < 40; ++i) {
      std::vector<std::uint64_t> e(width);
      for (auto& x : e) x = entry(rng);
      ts.emplace_back(std::move(e));
    }
    const auto [k, l] = good_pair_via_hl(ts, scan_higman);
    ASSERT_LT(k, l);
    ASSERT_TRUE(tuple_leq(ts[k], ts[l]));
  }
}

TEST(Universes, Sizes) {
  EXPECT_EQ(all_strings(3).size(), 1u + 2 + 4);
  EXPECT_EQ(all_strings(2)[1], S("00"));
  EXPECT_EQ(all_tuples(2, 3).size(), 9u);
}
