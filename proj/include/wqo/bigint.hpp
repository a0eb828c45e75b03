#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace wqo {

using BigInt = boost::multiprecision::cpp_int;

// Limits for arbitrary-precision work. Exceeding either one raises
// BudgetExceeded; nothing is ever truncated silently.
struct Budget {
  std::size_t max_bits = 1u << 20;
  std::uint64_t max_steps = 50'000'000;
  // Largest universe an enumerator may materialize.
  std::size_t max_terms = 2'000'000;
};

// Bit length of a nonnegative value (0 for 0).
std::size_t bit_length(const BigInt& v);

void check_bits(const BigInt& v, const Budget& budget);

// Throws BudgetExceeded when an enumeration would hold more than max_terms.
void check_terms(std::uint64_t count, const Budget& budget);

// base^exponent, refusing results longer than budget.max_bits.
BigInt checked_pow(const BigInt& base, const BigInt& exponent,
                   const Budget& budget);

// 2_k(l): 2_0(l) = l, 2_{k+1}(l) = 2^(2_k(l)).
BigInt two_tower(std::uint64_t k, const BigInt& l, const Budget& budget);

std::string to_string(const BigInt& v);

// Step counter shared by the recursive evaluators.
class StepMeter {
 public:
  explicit StepMeter(const Budget& budget) : budget_(budget) {}

  void tick(std::uint64_t n = 1);
  const Budget& budget() const { return budget_; }

 private:
  const Budget& budget_;
  std::uint64_t used_ = 0;
};

}  // namespace wqo
