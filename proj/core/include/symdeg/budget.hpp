#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace symdeg {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 1'000'000;

/// Enumeration budget: SYMDEG_BUDGET from the environment if set and valid,
/// otherwise kDefaultEnumerationBudget.
[[nodiscard]] std::uint64_t default_budget();

/// Thrown before an enumeration starts when it would visit more items than allowed.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, mpz_class required, std::uint64_t budget);

  [[nodiscard]] const mpz_class& required() const { return required_; }
  [[nodiscard]] std::uint64_t budget() const { return budget_; }

 private:
  mpz_class required_;
  std::uint64_t budget_;
};

/// Throws BudgetExceeded if count > budget.
void check_budget(const std::string& what, const mpz_class& count, std::uint64_t budget);

}  // namespace symdeg
