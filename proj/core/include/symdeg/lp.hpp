#pragma once

#include <cstddef>
#include <vector>

#include "symdeg/rational.hpp"

namespace symdeg::lp {

enum class Relation { LessEqual, GreaterEqual, Equal };
enum class Domain { Free, NonNegative };

struct Constraint {
  std::vector<Rational> coeffs;
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

/// minimize objective . x  subject to constraints, x_k in domains[k].
struct Program {
  std::vector<Rational> objective;
  std::vector<Domain> domains;
  std::vector<Constraint> constraints;

  [[nodiscard]] std::size_t variable_count() const { return objective.size(); }
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  Rational objective;
  std::vector<Rational> values;
  std::size_t pivots = 0;
};

/// Two-phase dense tableau simplex over exact rationals. Bland's rule (smallest
/// index enters, ties in the ratio test go to the smallest basic index) makes
/// the pivot sequence, and therefore the returned vertex, deterministic and
/// cycle-free. Throws std::invalid_argument on inconsistent sizes.
[[nodiscard]] Solution solve(const Program& program);

}  // namespace symdeg::lp
