#include "wqo/ack_term.hpp"

#include <map>
#include <unordered_map>

#include "wqo/errors.hpp"

namespace wqo {

struct AckTerm::Node {
  Kind kind;
  AckTerm left;
  AckTerm right;
};

AckTerm AckTerm::plus(AckTerm left, AckTerm right) {
  AckTerm t;
  t.node_ = std::make_shared<const Node>(
      Node{Kind::Plus, std::move(left), std::move(right)});
  return t;
}

AckTerm AckTerm::app(AckTerm index, AckTerm arg) {
  AckTerm t;
  t.node_ = std::make_shared<const Node>(
      Node{Kind::App, std::move(index), std::move(arg)});
  return t;
}

AckTerm::Kind AckTerm::kind() const { return node_ ? node_->kind : Kind::One; }

const AckTerm& AckTerm::left() const {
  if (!node_) throw DomainError("1 has no subterms");
  return node_->left;
}

const AckTerm& AckTerm::right() const {
  if (!node_) throw DomainError("1 has no subterms");
  return node_->right;
}

std::size_t AckTerm::size() const {
  return node_ ? 1 + node_->left.size() + node_->right.size() : 1;
}

std::string AckTerm::str() const {
  switch (kind()) {
    case Kind::One:
      return "1";
    case Kind::Plus:
      return "(" + left().str() + "+" + right().str() + ")";
    case Kind::App:
      return "A(" + left().str() + "," + right().str() + ")";
  }
  return {};
}

bool operator==(const AckTerm& a, const AckTerm& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  return a.node_->kind == b.node_->kind && a.node_->left == b.node_->left &&
         a.node_->right == b.node_->right;
}

namespace {

constexpr unsigned kMaxIndexDepth = 10000;

class AckEvaluator {
 public:
  AckEvaluator(RecurrenceProfile profile, const BigInt& k, const Budget& budget)
      : profile_(profile), k_(k), budget_(budget), meter_(budget) {
    if (k_ < 1) throw DomainError("A_a(k,b) needs k >= 1");
  }

  BigInt operator()(const BigInt& a, const BigInt& b) {
    if (a < 1 || b < 1) throw DomainError("A_a(k,b) needs a, b >= 1");
    if (a > kMaxIndexDepth) {
      throw BudgetExceeded("Ackermann index exceeds recursion depth limit");
    }
    return eval(a, b);
  }

 private:
  BigInt eval(const BigInt& a, const BigInt& b) {
    meter_.tick();
    if (a == 1) {
      const BigInt base = profile_ == RecurrenceProfile::Literal ? b : b + 1;
      return checked_pow(base, k_, budget_);
    }
    auto key = std::make_pair(a, b);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    // A_a(k,1) = A_{a-1}(k,a-1)^k, then A_a(k,i+1) = A_{a-1}(k, A_a(k,i))^k
    BigInt v = checked_pow(eval(a - 1, a - 1), k_, budget_);
    for (BigInt i = 2; i <= b; ++i) {
      BigInt next = checked_pow(eval(a - 1, v), k_, budget_);
      if (next == v) break;  // fixed point: every later step repeats it
      v = std::move(next);
    }
    memo_.emplace(std::move(key), v);
    return v;
  }

  RecurrenceProfile profile_;
  BigInt k_;
  const Budget& budget_;
  StepMeter meter_;
  std::map<std::pair<BigInt, BigInt>, BigInt> memo_;
};

BigInt value_rec(const AckTerm& t, AckEvaluator& ack, const Budget& budget) {
  switch (t.kind()) {
    case AckTerm::Kind::One:
      return 1;
    case AckTerm::Kind::Plus: {
      BigInt v = value_rec(t.left(), ack, budget) + value_rec(t.right(), ack, budget);
      check_bits(v, budget);
      return v;
    }
    case AckTerm::Kind::App: {
      const BigInt a = value_rec(t.left(), ack, budget);
      const BigInt b = value_rec(t.right(), ack, budget);
      return ack(a, b);
    }
  }
  return 0;
}

}  // namespace

BigInt ack_eval(RecurrenceProfile profile, const BigInt& a, const BigInt& k,
                const BigInt& b, const Budget& budget) {
  AckEvaluator ack(profile, k, budget);
  return ack(a, b);
}

BigInt ack_omega(RecurrenceProfile profile, const BigInt& k, const BigInt& b,
                 const Budget& budget) {
  return ack_eval(profile, b, k, b, budget);
}

BigInt term_value(const AckTerm& t, const BigInt& k, RecurrenceProfile profile,
                  const Budget& budget) {
  AckEvaluator ack(profile, k, budget);
  return value_rec(t, ack, budget);
}

BasedTerm base_change(const BasedTerm& t, std::uint64_t h) {
  if (h < 1) throw DomainError("base must be positive");
  return BasedTerm{t.term, h};
}

namespace {

class LeqK {
 public:
  explicit LeqK(RelationMode mode) : mode_(mode) {}

  bool operator()(const AckTerm& s, const AckTerm& t) {
    if (s.is_one()) return true;
    if (t.is_one()) return false;
    auto key = std::make_pair(&s, &t);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool r = (*this)(s, t.left()) || (*this)(s, t.right());
    if (!r && mode_ == RelationMode::Embedding && s.kind() == t.kind()) {
      r = (*this)(s.left(), t.left()) && (*this)(s.right(), t.right());
    }
    memo_.emplace(key, r);
    return r;
  }

 private:
  struct Hash {
    std::size_t operator()(const std::pair<const AckTerm*, const AckTerm*>& p) const {
      auto a = reinterpret_cast<std::uintptr_t>(p.first);
      auto b = reinterpret_cast<std::uintptr_t>(p.second);
      return std::hash<std::uintptr_t>{}(a * 0x9e3779b97f4a7c15ULL ^ b);
    }
  };
  RelationMode mode_;
  std::unordered_map<std::pair<const AckTerm*, const AckTerm*>, bool, Hash> memo_;
};

}  // namespace

bool leq_k(RelationMode mode, const AckTerm& s, const AckTerm& t) {
  LeqK leq(mode);
  return leq(s, t);
}

BoundFn sigma_bound(std::uint64_t d) {
  if (d < 1) throw DomainError("f_d needs d >= 1");
  return [d](std::uint64_t K, std::uint64_t i, const Budget& budget) {
    const BigInt inner = checked_pow(BigInt(i + 2), BigInt(K), budget);
    return two_tower(d - 1, inner, budget);
  };
}

BoundFn atr_bound(AtrWiring wiring, RecurrenceProfile profile) {
  return [wiring, profile](std::uint64_t K, std::uint64_t i,
                           const Budget& budget) {
    const BigInt base = i + 2;
    if (wiring == AtrWiring::ArgSlot) {
      BigInt x = 0;
      for (std::uint64_t r = 0; r < K; ++r) {
        if (x < 1) {
          throw DomainError("A_w(k,0) is outside the recurrence's domain");
        }
        x = ack_omega(profile, base, x, budget);
      }
      return x;
    }
    BigInt x = base;
    for (std::uint64_t r = 0; r < K; ++r) x = ack_omega(profile, x, x, budget);
    return x;
  };
}

WVerdict w_check(const BoundFn& f, std::uint64_t K, std::span<const AckTerm> terms,
                 RelationMode mode, RecurrenceProfile profile,
                 const Budget& budget) {
  if (terms.empty()) throw DomainError("sequence must be nonempty");
  WVerdict v;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (term_value(terms[i], i + 2, profile, budget) > f(K, i, budget)) {
      v.violation = i;
      return v;
    }
  }
  v.hypothesis_holds = true;
  for (std::size_t j = 0; j + 1 < terms.size(); ++j) {
    if (leq_k(mode, terms[j], terms[j + 1])) {
      v.j = j;
      break;
    }
  }
  return v;
}

AckTerm default_selection(std::uint64_t i, std::uint64_t n) {
  if (i < 1 || n < 1) throw DomainError("selection needs i, n >= 1");
  AckTerm t = AckTerm::one();
  for (std::uint64_t r = 1; r < n; ++r) t = AckTerm::plus(t, AckTerm::one());
  return t;
}

WtVerdict wt_check(const SelectionFn& t, const BoundFn& f, std::uint64_t K,
                   std::span<const std::uint64_t> values, RelationMode mode,
                   RecurrenceProfile profile, const Budget& budget) {
  if (values.empty()) throw DomainError("sequence must be nonempty");
  WtVerdict v;
  std::vector<AckTerm> selected;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == 0) throw DomainError("values must be positive");
    if (BigInt(values[i]) > f(K, i, budget)) {
      v.violation = i;
      return v;
    }
    AckTerm term = t(i + 2, values[i]);
    if (term_value(term, i + 2, profile, budget) != values[i]) {
      throw DomainError("selection function returned a term of the wrong value");
    }
    selected.push_back(std::move(term));
  }
  v.hypothesis_holds = true;
  for (std::size_t j = 1; j < selected.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (leq_k(mode, selected[i], selected[j])) {
        v.pair = std::make_pair(i, j);
        return v;
      }
    }
  }
  return v;
}

std::vector<AckTerm> enumerate_ack_terms(std::size_t max_nodes, const Budget& budget) {
  {
    check_terms(max_nodes, budget);
    std::vector<std::uint64_t> count(max_nodes + 1, 0);
    std::uint64_t total = 0;
    for (std::size_t n = 1; n <= max_nodes; ++n) {
      if (n == 1) count[1] = 1;
      for (std::size_t l = 1; n >= 3 && l + 1 < n; ++l) {
        count[n] += 2 * count[l] * count[n - 1 - l];
        check_terms(count[n], budget);
      }
      total += count[n];
      check_terms(total, budget);
    }
  }
  std::vector<std::vector<AckTerm>> by_size(max_nodes + 1);
  std::vector<AckTerm> out;
  for (std::size_t n = 1; n <= max_nodes; ++n) {
    if (n == 1) {
      by_size[1].push_back(AckTerm::one());
    } else if (n >= 3) {
      for (auto make : {&AckTerm::plus, &AckTerm::app}) {
        for (std::size_t l = 1; l + 1 < n; ++l) {
          const std::size_t r = n - 1 - l;
          for (const AckTerm& a : by_size[l])
            for (const AckTerm& b : by_size[r]) by_size[n].push_back(make(a, b));
        }
      }
    }
    out.insert(out.end(), by_size[n].begin(), by_size[n].end());
  }
  return out;
}

std::vector<AckTerm> w_universe(const BoundFn& f, std::uint64_t K,
                                std::uint64_t i, const WSearchOptions& options,
                                const Budget& budget, bool* truncated) {
  const BigInt bound = f(K, i, budget);
  if (bound < 1) return {};
  std::size_t cap = 0;
  if (options.max_nodes) {
    cap = *options.max_nodes;
    const bool complete = options.profile == RecurrenceProfile::Repaired &&
                          BigInt(cap) >= 2 * bound - 1;
    if (truncated && !complete) *truncated = true;
  } else {
    if (options.profile == RecurrenceProfile::Literal) {
      throw DomainError("literal-profile universes need an explicit node cap");
    }
    // Under Repaired every term's value is at least its number of leaves.
    if (bound > 64) throw BudgetExceeded("value bound too large to enumerate");
    cap = 2 * static_cast<std::size_t>(bound) - 1;
  }
  // Under Repaired each subcomputation is at most the final value, so a bit
  // cap just above the bound decides "exceeds" early.
  Budget tight = budget;
  if (options.profile == RecurrenceProfile::Repaired) {
    tight.max_bits = std::min(budget.max_bits, bit_length(bound) + 1);
  }
  std::vector<AckTerm> out;
  for (const AckTerm& t : enumerate_ack_terms(cap)) {
    try {
      if (term_value(t, i + 2, options.profile, tight) <= bound) out.push_back(t);
    } catch (const BitBudgetExceeded&) {
      if (options.profile != RecurrenceProfile::Repaired) throw;
    }
  }
  return out;
}

WSearchResult w_search_min_M(const BoundFn& f, std::uint64_t K,
                             std::uint64_t max_M, const WSearchOptions& options,
                             const Budget& budget) {
  WSearchResult result;
  // reachable: last elements of bad sequences a_0..a_i
  std::vector<AckTerm> reachable;
  for (std::uint64_t M = 0; M <= max_M; ++M) {
    bool truncated = false;
    std::vector<AckTerm> universe =
        w_universe(f, K, M, options, budget, &truncated);
    result.truncated = result.truncated || truncated;
    result.universe_sizes.push_back(universe.size());
    if (M == 0) {
      reachable = std::move(universe);
    } else {
      std::vector<AckTerm> next;
      for (const AckTerm& s : universe) {
        for (const AckTerm& t : reachable) {
          if (!leq_k(options.mode, t, s)) {
            next.push_back(s);
            break;
          }
        }
      }
      reachable = std::move(next);
    }
    if (reachable.empty()) {
      result.min_M = M;
      return result;
    }
  }
  return result;
}

}  // namespace wqo
