#include "wqo/exp_term.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "wqo/errors.hpp"

namespace wqo {

struct ExpTerm::Node {
  ExpTerm exponent;
  ExpTerm rest;
};

ExpTerm ExpTerm::node(ExpTerm exponent, ExpTerm rest) {
  ExpTerm t;
  t.node_ = std::make_shared<const Node>(Node{std::move(exponent), std::move(rest)});
  return t;
}

const ExpTerm& ExpTerm::exponent() const {
  if (!node_) throw DomainError("0 has no exponent");
  return node_->exponent;
}

const ExpTerm& ExpTerm::rest() const {
  if (!node_) throw DomainError("0 has no rest");
  return node_->rest;
}

std::size_t ExpTerm::size() const {
  return node_ ? 1 + node_->exponent.size() + node_->rest.size() : 1;
}

std::string ExpTerm::str() const {
  if (!node_) return "0";
  return "x^(" + node_->exponent.str() + ")+(" + node_->rest.str() + ")";
}

bool operator==(const ExpTerm& a, const ExpTerm& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  return a.node_->exponent == b.node_->exponent && a.node_->rest == b.node_->rest;
}

BigInt eval_at(const ExpTerm& a, const BigInt& k, const Budget& budget) {
  if (k < 1) throw DomainError("base must be positive");
  if (a.is_zero()) return 0;
  BigInt v = checked_pow(k, eval_at(a.exponent(), k, budget), budget) +
             eval_at(a.rest(), k, budget);
  check_bits(v, budget);
  return v;
}

Ordinal to_ordinal(const ExpTerm& a) {
  if (a.is_zero()) return Ordinal::zero();
  return natural_sum(Ordinal::omega_power(to_ordinal(a.exponent())),
                     to_ordinal(a.rest()));
}

std::vector<ExpTerm> enumerate_exp(std::uint64_t bound_at_2, const Budget& budget) {
  // Count first so an oversized request fails before allocating.
  {
    check_terms(bound_at_2, budget);
    std::vector<std::uint64_t> count(bound_at_2 + 1, 0);
    count[0] = 1;
    std::uint64_t total = 1;
    for (std::uint64_t v = 1; v <= bound_at_2; ++v) {
      for (std::uint64_t cv = 0; cv < 64 && (std::uint64_t{1} << cv) <= v; ++cv) {
        const std::uint64_t rv = v - (std::uint64_t{1} << cv);
        count[v] += count[cv] * count[rv];
        check_terms(count[v], budget);
      }
      total += count[v];
      check_terms(total, budget);
    }
  }
  // by_value[v]: all terms with value exactly v at base 2
  std::vector<std::vector<ExpTerm>> by_value(bound_at_2 + 1);
  by_value[0].push_back(ExpTerm::zero());
  for (std::uint64_t v = 1; v <= bound_at_2; ++v) {
    for (std::uint64_t cv = 0; cv < 64 && (std::uint64_t{1} << cv) <= v; ++cv) {
      const std::uint64_t rv = v - (std::uint64_t{1} << cv);
      for (const ExpTerm& c : by_value[cv])
        for (const ExpTerm& b : by_value[rv])
          by_value[v].push_back(ExpTerm::node(c, b));
    }
  }
  std::vector<ExpTerm> out;
  for (auto& layer : by_value) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

SwoVerdict swo_check(std::uint64_t K, std::span<const ExpTerm> terms,
                     const Budget& budget) {
  if (terms.empty()) throw DomainError("sequence must be nonempty");
  SwoVerdict v;
  const std::size_t M = terms.size() - 1;
  for (std::size_t i = 0; i <= M; ++i) {
    if (eval_at(terms[i], 2, budget) > two_tower(K, BigInt(i), budget)) {
      v.violation = i;
      return v;
    }
  }
  v.hypothesis_holds = true;
  v.base = two_tower(K, BigInt(M), budget);
  BigInt prev = eval_at(terms[0], v.base, budget);
  for (std::size_t j = 0; j < M; ++j) {
    BigInt next = eval_at(terms[j + 1], v.base, budget);
    if (prev <= next) {
      v.j = j;
      break;
    }
    prev = std::move(next);
  }
  return v;
}

std::vector<BigInt> exp_values_at(std::uint64_t bound_at_2, const BigInt& N,
                                  const Budget& budget) {
  StepMeter meter(budget);
  std::vector<std::vector<BigInt>> by_value(bound_at_2 + 1);
  by_value[0].push_back(0);
  for (std::uint64_t v = 1; v <= bound_at_2; ++v) {
    std::set<BigInt> acc;
    for (std::uint64_t cv = 0; cv < 64 && (std::uint64_t{1} << cv) <= v; ++cv) {
      const std::uint64_t rv = v - (std::uint64_t{1} << cv);
      for (const BigInt& c : by_value[cv]) {
        const BigInt head = checked_pow(N, c, budget);
        for (const BigInt& b : by_value[rv]) {
          meter.tick();
          BigInt value = head + b;
          check_bits(value, budget);
          acc.insert(std::move(value));
        }
      }
    }
    by_value[v].assign(acc.begin(), acc.end());
  }
  std::set<BigInt> all;
  for (const auto& layer : by_value) all.insert(layer.begin(), layer.end());
  return {all.begin(), all.end()};
}

namespace {

// Depth-first search for a strictly descending run v_0 > v_1 > ... > v_M with
// v_i drawn from values[i]. Larger candidates dominate smaller ones, so a
// failed branch ends the scan at that depth.
bool descend(const std::vector<std::vector<BigInt>>& values, std::size_t i,
             const BigInt* prev, std::size_t& deepest) {
  deepest = std::max(deepest, i);
  const auto& vs = values[i];
  for (auto it = vs.rbegin(); it != vs.rend(); ++it) {
    if (prev && !(*it < *prev)) continue;
    if (i + 1 == values.size()) {
      deepest = values.size();
      return true;
    }
    return descend(values, i + 1, &*it, deepest);
  }
  return false;
}

}  // namespace

SwoSearchResult swo_search_min_M(std::uint64_t K, std::uint64_t max_M,
                                 const Budget& budget) {
  SwoSearchResult result;
  for (std::uint64_t M = 0; M <= max_M; ++M) {
    const BigInt N = two_tower(K, BigInt(M), budget);
    std::vector<std::vector<BigInt>> values;
    for (std::uint64_t i = 0; i <= M; ++i) {
      const BigInt bound = two_tower(K, BigInt(i), budget);
      if (bound > BigInt(std::uint64_t{1} << 20)) {
        throw BudgetExceeded("value bound 2_K(i) too large to enumerate");
      }
      values.push_back(
          exp_values_at(static_cast<std::uint64_t>(bound), N, budget));
    }
    std::size_t deepest = 0;
    const bool bad_exists = descend(values, 0, nullptr, deepest);
    result.longest_descent.push_back(deepest);
    if (!bad_exists) {
      result.min_M = M;
      return result;
    }
  }
  return result;
}

}  // namespace wqo
