#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "symdeg/budget.hpp"
#include "symdeg/degreelp.hpp"
#include "symdeg/properties.hpp"
#include "symdeg/sympoly.hpp"
#include "symdeg/ypoly.hpp"

namespace symdeg {

/// Calls visit(f) for each f:[n] -> [m] in lexicographic order of (f(1), ..., f(n)).
/// Throws BudgetExceeded before visiting anything if m^n > budget.
void for_each_function(int n, int m, const std::function<void(const FunctionTable&)>& visit,
                       std::uint64_t budget = default_budget());

[[nodiscard]] std::vector<FunctionTable> enumerate_functions(int n, int m, std::uint64_t budget = default_budget());

enum class Bound { Lower, Upper };

/// One failed approximation constraint.
struct Violation {
  enum class Kind { Class, Function };
  Kind kind = Kind::Class;
  /// Class partition parts, or function values f(1..n).
  std::vector<int> input;
  Label label = Label::Undefined;
  Rational value;
  Bound bound = Bound::Lower;
  Rational limit;
};

struct RangeRow {
  int m = 0;
  int degree = 0;
  std::vector<Rational> eps_min;
};

struct Report {
  bool pass = true;
  std::vector<Violation> violations;
  std::vector<RangeRow> table;
};

/// Class-level check of a symmetric polynomial over every frequency class at (n, q.m()).
[[nodiscard]] Report verify_approximation(const SymPolynomial& q, const PropertySpec& prop, int n,
                                          const Rational& eps);

/// Function-level check over every f:[n] -> [m]. Only y-assignments that come
/// from functions are constrained.
[[nodiscard]] Report verify_approximation(const YPolynomial& p, const PropertySpec& prop, const Rational& eps,
                                          std::uint64_t budget = default_budget());

/// approx_degree for every m in [n, m_max]; passes iff all degrees agree.
[[nodiscard]] Report verify_range_invariance(const PropertySpec& prop, int n, int m_max, const Rational& eps);

/// Minimum epsilon over ALL (not necessarily symmetric) multilinear
/// y-polynomials of degree <= d, from an LP with one constraint pair per function.
[[nodiscard]] Rational full_basis_eps_min(const PropertySpec& prop, int n, int m, int d,
                                          std::uint64_t budget = default_budget());

/// Every normalized y-monomial (distinct rows) of degree <= d over dims, in canonical order.
[[nodiscard]] std::vector<YMonomial> normal_monomials(Dims dims, int d);

}  // namespace symdeg
