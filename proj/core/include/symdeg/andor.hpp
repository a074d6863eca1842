#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <vector>

#include "symdeg/degreelp.hpp"
#include "symdeg/rational.hpp"
#include "symdeg/ypoly.hpp"

namespace symdeg {

/// Assignment to x_1..x_{n^2}; group i is x_{(i-1)n+1} .. x_{in}.
class BoolAssignment {
 public:
  BoolAssignment(int n, std::vector<bool> bits);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] const std::vector<bool>& bits() const { return bits_; }
  /// x_k for 1-based k.
  [[nodiscard]] bool operator[](int k) const { return bits_[static_cast<std::size_t>(k - 1)]; }

 private:
  int n_;
  std::vector<bool> bits_;
};

/// AND over groups of the OR within each group.
[[nodiscard]] bool andor_value(const BoolAssignment& x);

/// Sorted set of 1-based x-variable indices.
class XMonomial {
 public:
  XMonomial() = default;
  XMonomial(std::initializer_list<int> vars);
  explicit XMonomial(std::vector<int> vars);

  [[nodiscard]] const std::vector<int>& vars() const { return vars_; }
  [[nodiscard]] std::size_t size() const { return vars_.size(); }

  friend auto operator<=>(const XMonomial&, const XMonomial&) = default;

 private:
  std::vector<int> vars_;
};

/// Multilinear polynomial over x_1..x_{n^2}.
class XPolynomial {
 public:
  using TermMap = std::map<XMonomial, Rational>;

  explicit XPolynomial(int n);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] Degree degree() const;

  /// Throws std::out_of_range for an index outside 1..n^2.
  void add_term(const XMonomial& mono, const Rational& c);

  friend bool operator==(const XPolynomial&, const XPolynomial&) = default;

 private:
  int n_;
  TermMap terms_;
};

[[nodiscard]] Rational eval_x(const XPolynomial& p, const BoolAssignment& x);

/// Renames x_{(i-1)n+j} to y_{ji} and normalizes; the result lives on (n, n).
[[nodiscard]] YPolynomial substitute(const XPolynomial& p);

/// x_{(i-1)n+j} = 1 iff f(j) = i. Throws std::invalid_argument unless f.m() == f.n().
[[nodiscard]] BoolAssignment f_to_assignment(const FunctionTable& f);

/// deg(AND-OR on n^2 variables) >= deg(element distinctness on (n, n)).
struct AndOrBound {
  int n = 0;
  int variables = 0;
  Rational epsilon;
  int element_distinctness_degree = 0;
  int andor_degree_lower_bound = 0;
};

[[nodiscard]] AndOrBound andor_degree_bound(int n, const Rational& eps);

}  // namespace symdeg
