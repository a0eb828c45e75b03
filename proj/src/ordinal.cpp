#include "wqo/ordinal.hpp"

#include <algorithm>

#include "wqo/errors.hpp"

namespace wqo {

Ordinal Ordinal::finite(const BigInt& n) {
  if (n < 0) throw DomainError("negative finite ordinal");
  if (n == 0) return {};
  return omega_power(Ordinal{}, n);
}

Ordinal Ordinal::omega_power(const Ordinal& exponent, const BigInt& coefficient) {
  if (coefficient <= 0) throw DomainError("coefficient must be positive");
  Ordinal o;
  o.summands_.push_back({exponent, coefficient});
  return o;
}

Ordinal Ordinal::from_summands(std::vector<Summand> summands) {
  for (std::size_t i = 0; i < summands.size(); ++i) {
    if (summands[i].coefficient <= 0) {
      throw DomainError("coefficient must be positive");
    }
    if (i > 0 && !(summands[i].exponent < summands[i - 1].exponent)) {
      throw DomainError("exponents must be strictly decreasing");
    }
  }
  Ordinal o;
  o.summands_ = std::move(summands);
  return o;
}

bool Ordinal::is_successor() const {
  return !summands_.empty() && summands_.back().exponent.is_zero();
}

std::optional<BigInt> Ordinal::as_finite() const {
  if (summands_.empty()) return BigInt(0);
  if (summands_.size() == 1 && summands_[0].exponent.is_zero()) {
    return summands_[0].coefficient;
  }
  return std::nullopt;
}

std::string Ordinal::str() const {
  if (summands_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : summands_) {
    if (!out.empty()) out += "+";
    if (e.is_zero()) {
      out += c.str();
      continue;
    }
    out += "w";
    if (!(e == Ordinal::finite(1))) out += "^(" + e.str() + ")";
    if (c != 1) out += "*" + c.str();
  }
  return out;
}

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) {
  const auto& x = a.summands();
  const auto& y = b.summands();
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = compare(x[i].exponent, y[i].exponent); c != 0) return c;
    if (x[i].coefficient != y[i].coefficient) {
      return x[i].coefficient < y[i].coefficient ? std::strong_ordering::less
                                                 : std::strong_ordering::greater;
    }
  }
  return x.size() <=> y.size();
}

Ordinal natural_sum(const Ordinal& a, const Ordinal& b) {
  const auto& x = a.summands();
  const auto& y = b.summands();
  std::vector<Ordinal::Summand> out;
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].exponent > y[j].exponent)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].exponent > x[i].exponent) {
      out.push_back(y[j++]);
    } else {
      out.push_back({x[i].exponent, x[i].coefficient + y[j].coefficient});
      ++i;
      ++j;
    }
  }
  return Ordinal::from_summands(std::move(out));
}

BigInt max_coefficient(const Ordinal& a) {
  BigInt m = 0;
  for (const auto& [e, c] : a.summands()) {
    m = std::max(m, c);
    m = std::max(m, max_coefficient(e));
  }
  return m;
}

Ordinal fundamental_seq(const Ordinal& a, const BigInt& i) {
  if (a.is_zero()) throw DomainError("0 has no fundamental sequence");
  if (i < 0) throw DomainError("negative index");
  std::vector<Ordinal::Summand> s = a.summands();
  const Ordinal g = s.back().exponent;
  const BigInt c = s.back().coefficient;
  s.pop_back();
  if (c > 1) s.push_back({g, c - 1});
  if (g.is_zero()) return Ordinal::from_summands(std::move(s));
  if (g.is_successor()) {
    if (i > 0) s.push_back({fundamental_seq(g, 0), i});
  } else {
    s.push_back({fundamental_seq(g, i), 1});
  }
  return Ordinal::from_summands(std::move(s));
}

BigInt slow_growing(const Ordinal& a, const BigInt& n, const Budget& budget) {
  if (n < 0) throw DomainError("negative argument");
  BigInt total = 0;
  for (const auto& [e, c] : a.summands()) {
    total += c * checked_pow(n, slow_growing(e, n, budget), budget);
    check_bits(total, budget);
  }
  return total;
}

Ordinal omega_tower(std::uint64_t k) {
  Ordinal o = Ordinal::finite(1);
  for (std::uint64_t i = 0; i < k; ++i) o = Ordinal::omega_power(o);
  return o;
}

DescentVerdict descent_check(std::uint64_t K, std::span<const Ordinal> alphas,
                             const Budget& budget) {
  if (alphas.empty()) throw DomainError("sequence must be nonempty");
  DescentVerdict v;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (max_coefficient(alphas[i]) > two_tower(K, BigInt(i), budget)) {
      v.violation = i;
      return v;
    }
  }
  v.hypothesis_holds = true;
  for (std::size_t j = 0; j + 1 < alphas.size(); ++j) {
    if (alphas[j] <= alphas[j + 1]) {
      v.j = j;
      break;
    }
  }
  return v;
}

std::vector<Ordinal> canonical_descent(std::uint64_t K, std::size_t max_length) {
  if (K < 2) throw DomainError("canonical descent needs K >= 2");
  std::vector<Ordinal> seq{omega_tower(K - 2)};
  while (!seq.back().is_zero()) {
    if (seq.size() >= max_length) {
      throw BudgetExceeded("canonical descent longer than " +
                           std::to_string(max_length));
    }
    seq.push_back(fundamental_seq(seq.back(), seq.size() - 1));
  }
  return seq;
}

}  // namespace wqo
