#include "symdeg/budget.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <utility>

namespace symdeg {

std::uint64_t default_budget() {
  const char* env = std::getenv("SYMDEG_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultEnumerationBudget;
  std::uint64_t value = 0;
  const char* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc() || ptr != end) return kDefaultEnumerationBudget;
  return value;
}

BudgetExceeded::BudgetExceeded(const std::string& what, mpz_class required, std::uint64_t budget)
    : std::runtime_error(what + ": " + required.get_str() + " items exceed enumeration budget " +
                         std::to_string(budget)),
      required_(std::move(required)),
      budget_(budget) {}

void check_budget(const std::string& what, const mpz_class& count, std::uint64_t budget) {
  if (count > mpz_class(std::to_string(budget))) throw BudgetExceeded(what, count, budget);
}

}  // namespace symdeg
