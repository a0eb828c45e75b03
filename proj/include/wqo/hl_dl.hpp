#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wqo::hl {

/// Nonempty 0/1 string starting with 0.
class BinaryString01 {
 public:
  /// Throws DomainError on an empty list, a leading 1 or a letter not in {0,1}.
  explicit BinaryString01(std::vector<std::uint8_t> letters);
  /// Parses ASCII '0'/'1' text.
  static BinaryString01 parse(std::string_view text);

  const std::vector<std::uint8_t>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  std::uint8_t operator[](std::size_t i) const { return letters_[i]; }
  std::string str() const;

  friend bool operator==(const BinaryString01&, const BinaryString01&) = default;
  friend auto operator<=>(const BinaryString01&, const BinaryString01&) = default;

 private:
  std::vector<std::uint8_t> letters_;
};

/// Nonempty tuple of positive integers.
class PosTuple {
 public:
  explicit PosTuple(std::vector<std::uint64_t> entries);
  /// Parses "(1,2,3)"; the parentheses are optional.
  static PosTuple parse(std::string_view text);

  const std::vector<std::uint64_t>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::uint64_t operator[](std::size_t i) const { return entries_[i]; }
  std::string str() const;

  friend bool operator==(const PosTuple&, const PosTuple&) = default;

 private:
  std::vector<std::uint64_t> entries_;
};

using Index = std::size_t;
using IndexPair = std::pair<Index, Index>;

/// λ: the last letter.
std::uint8_t last_letter(const BinaryString01& w);

/// Φ: number of maximal constant blocks.
std::size_t weight(const BinaryString01& w);

/// F: block lengths, left to right.
PosTuple to_tuple(const BinaryString01& w);

/// Inverse of F: alternating blocks 0,1,0,... of the given lengths.
BinaryString01 from_tuple(const PosTuple& t);

/// G_n: pad with 1s up to length n or keep the first n entries.
PosTuple normalize(const PosTuple& t, std::size_t n);

/// u!_n = from_tuple(G_n(F(u))).
BinaryString01 bang(const BinaryString01& u, std::size_t n);

/// Letter-exact subsequence order on strings.
bool subseq_embed(const BinaryString01& v, const BinaryString01& w);

/// Component-wise order on tuples of equal width.
bool tuple_leq(const PosTuple& a, const PosTuple& b);

/// 0101...01 of length 2m.
BinaryString01 alternating_word(std::size_t m);

/// Finds a good pair k < l (componentwise <=) in a list of equal-width tuples,
/// or nullopt if none exists within the list.
using DicksonOracle =
    std::function<std::optional<IndexPair>(std::span<const PosTuple>)>;
/// Finds a good pair k < l (subsequence) in a list of strings.
using HigmanOracle =
    std::function<std::optional<IndexPair>(std::span<const BinaryString01>)>;

/// Least (l, then k) scans.
std::optional<IndexPair> scan_dickson(std::span<const PosTuple> ts);
std::optional<IndexPair> scan_higman(std::span<const BinaryString01> xs);

/// Good pair for strings obtained from a good pair of the (n+1)-tuples
/// (F_n(x!_n), Φ(x)) with n = 2|xs[0]|. When n < Φ(xs[l]) the pair is (0, l),
/// otherwise (k, l). Throws SearchExhausted if the oracle finds nothing.
IndexPair good_pair_via_dl(std::span<const BinaryString01> xs,
                           const DicksonOracle& dl_oracle);

/// Good pair for width-n tuples obtained by mapping through from_tuple and
/// asking the Higman oracle. Throws SearchExhausted if the oracle finds
/// nothing, DomainError on mixed widths.
IndexPair good_pair_via_hl(std::span<const PosTuple> ts,
                           const HigmanOracle& hl_oracle);

/// All strings in {0,1}*_0 with length 1..max_len, by length then value.
std::vector<BinaryString01> all_strings(std::size_t max_len);

/// All tuples of the given width with entries in 1..max_entry.
std::vector<PosTuple> all_tuples(std::size_t width, std::uint64_t max_entry);

/// One executable property over a bounded universe.
struct ClaimCheck {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t counterexamples = 0;
  /// First counterexample in enumeration order, rendered as text.
  std::string first_counterexample;
  /// False for statements known to fail as stated; such a check is
  /// satisfied when a counterexample is found.
  bool expected = true;

  bool satisfied() const {
    return expected ? counterexamples == 0 : counterexamples > 0;
  }
};

/// Claims 1-4 and the round trip. Strings range over lengths 1..max_len,
/// normalization widths over 1..max_n, tuples over widths 1..max_width with
/// entries 1..max_entry.
std::vector<ClaimCheck> run_claims(std::size_t max_len, std::size_t max_n,
                                   std::size_t max_width = 4,
                                   std::uint64_t max_entry = 4);

}  // namespace wqo::hl
