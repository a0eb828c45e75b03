#include "wqo/bigint.hpp"

#include "wqo/errors.hpp"

namespace wqo {

std::size_t bit_length(const BigInt& v) {
  if (v == 0) return 0;
  return boost::multiprecision::msb(v) + 1;
}

void check_bits(const BigInt& v, const Budget& budget) {
  if (bit_length(v) > budget.max_bits) {
    throw BitBudgetExceeded("value exceeds bit budget of " +
                         std::to_string(budget.max_bits));
  }
}

void check_terms(std::uint64_t count, const Budget& budget) {
  if (count > budget.max_terms) {
    throw BudgetExceeded("enumeration of " + std::to_string(count) +
                         " terms exceeds the limit of " +
                         std::to_string(budget.max_terms));
  }
}

BigInt checked_pow(const BigInt& base, const BigInt& exponent,
                   const Budget& budget) {
  if (exponent < 0) throw DomainError("negative exponent");
  if (exponent == 0) return 1;
  if (base == 0 || base == 1) return base;
  // bits(base^e) >= (bits(base) - 1) * e + 1
  const BigInt lower = BigInt(bit_length(base) - 1) * exponent + 1;
  if (lower > budget.max_bits) {
    throw BitBudgetExceeded("power exceeds bit budget of " +
                         std::to_string(budget.max_bits));
  }
  BigInt result = boost::multiprecision::pow(
      base, static_cast<unsigned>(exponent));
  check_bits(result, budget);
  return result;
}

BigInt two_tower(std::uint64_t k, const BigInt& l, const Budget& budget) {
  BigInt v = l;
  for (std::uint64_t i = 0; i < k; ++i) v = checked_pow(2, v, budget);
  check_bits(v, budget);
  return v;
}

std::string to_string(const BigInt& v) { return v.str(); }

void StepMeter::tick(std::uint64_t n) {
  used_ += n;
  if (used_ > budget_.max_steps) {
    throw BudgetExceeded("step budget of " +
                         std::to_string(budget_.max_steps) + " exhausted");
  }
}

}  // namespace wqo
