#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "symdeg/lp.hpp"
#include "symdeg/partition.hpp"
#include "symdeg/properties.hpp"
#include "symdeg/rational.hpp"
#include "symdeg/sympoly.hpp"

namespace symdeg {

/// One input class of the degree LP with the basis values m_lambda(class).
struct ClassRow {
  Partition partition;
  Label label;
  std::vector<Rational> basis_values;
};

/// Minimum-epsilon LP for symmetric polynomials of degree <= d.
///
/// Variables are one free coefficient per basis partition plus epsilon >= 0.
/// Each class contributes two rows:
///   One:       Q + eps >= 1,  Q <= 1
///   Zero:      Q >= 0,        Q - eps <= 0
///   Undefined: Q >= 0,        Q <= 1
struct LPInstance {
  std::string property;
  int n = 0;
  int m = 0;
  int degree = 0;
  std::vector<Partition> basis;
  std::vector<ClassRow> classes;

  [[nodiscard]] std::size_t coefficient_count() const { return basis.size(); }
  [[nodiscard]] std::size_t row_count() const { return 2 * classes.size(); }
  /// Column order: basis coefficients, then epsilon.
  [[nodiscard]] lp::Program program() const;
};

[[nodiscard]] LPInstance build_lp(const PropertySpec& prop, int n, int m, int d);

struct LPOptimum {
  Rational eps_min;
  SymPolynomial polynomial;
};

/// Exact optimum of the instance. Throws std::logic_error if the solver reports
/// anything but optimality (the instance is always feasible and bounded).
[[nodiscard]] LPOptimum solve_lp(const LPInstance& inst);

struct DegreeRecord {
  int degree = 0;
  Rational eps_min;
  SymPolynomial optimum;
};

/// Per-degree minimum errors and the least degree reaching the target epsilon.
struct DegreeCertificate {
  std::string property;
  int n = 0;
  int m = 0;
  Rational epsilon;
  std::vector<DegreeRecord> records;
  int degree = 0;
  /// ceil(degree / 2): a T-query algorithm yields a polynomial of degree <= 2T.
  int query_lower_bound = 0;

  [[nodiscard]] const DegreeRecord& optimal() const { return records.back(); }
};

/// Linear search d = 0, 1, ... until eps_min(d) <= eps. Requires 0 <= eps < 1/2.
/// Throws std::logic_error if eps_min increases with d or the search passes
/// the exact-interpolation cap.
[[nodiscard]] DegreeCertificate approx_degree(const PropertySpec& prop, int n, int m, const Rational& eps);

}  // namespace symdeg
