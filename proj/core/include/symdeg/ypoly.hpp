#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symdeg/rational.hpp"

namespace symdeg {

/// Polynomial degree; std::nullopt (kNoDegree) is the degree of the zero polynomial.
using Degree = std::optional<std::size_t>;
inline constexpr std::nullopt_t kNoDegree = std::nullopt;

/// Domain and range sizes of f:[n] -> [m].
struct Dims {
  int n = 0;
  int m = 0;
  friend bool operator==(const Dims&, const Dims&) = default;
};

/// Indicator variable y_{row,col}, which is 1 iff f(row) = col. Indices are 1-based.
struct Factor {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Factor&, const Factor&) = default;
};

/// Product of distinct indicator variables, kept in row-major order.
///
/// A monomial may mention the same row twice with different columns; such a
/// monomial vanishes on every function and normalize() maps it to Zero.
class YMonomial {
 public:
  YMonomial() = default;
  YMonomial(std::initializer_list<Factor> factors);
  explicit YMonomial(std::vector<Factor> factors);

  [[nodiscard]] const std::vector<Factor>& factors() const { return factors_; }
  [[nodiscard]] std::size_t size() const { return factors_.size(); }
  [[nodiscard]] bool empty() const { return factors_.empty(); }
  /// True iff every row appears at most once.
  [[nodiscard]] bool is_normal() const;

  friend auto operator<=>(const YMonomial&, const YMonomial&) = default;

 private:
  std::vector<Factor> factors_;
};

/// Applies y^2 = y and y_{ij} y_{ij'} = 0 (j != j'). std::nullopt means the monomial is zero.
[[nodiscard]] std::optional<YMonomial> normalize(std::span<const Factor> factors);
[[nodiscard]] std::optional<YMonomial> normalize(const YMonomial& mono);

/// f:[n] -> [m] as a table of 1-based values.
class FunctionTable {
 public:
  FunctionTable(int n, int m, std::vector<int> values);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int m() const { return m_; }
  [[nodiscard]] Dims dims() const { return {n_, m_}; }
  [[nodiscard]] const std::vector<int>& values() const { return values_; }
  /// f(i) for 1-based i.
  [[nodiscard]] int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }
  [[nodiscard]] bool indicator(const Factor& y) const { return (*this)(y.row) == y.col; }
  /// z_j = |f^{-1}(j)| for j = 1..m, in coordinate order.
  [[nodiscard]] std::vector<int> counts() const;

  friend bool operator==(const FunctionTable&, const FunctionTable&) = default;

 private:
  int n_;
  int m_;
  std::vector<int> values_;
};

/// Multilinear polynomial in y_{ij}, i in [n], j in [m], with exact coefficients.
class YPolynomial {
 public:
  using TermMap = std::map<YMonomial, Rational>;

  explicit YPolynomial(Dims dims);
  static YPolynomial constant(Dims dims, const Rational& c);

  [[nodiscard]] Dims dims() const { return dims_; }
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  /// Adds c * mono, merging with an existing equal monomial. Zero sums are erased.
  /// Throws std::out_of_range if a factor lies outside dims.
  void add_term(const YMonomial& mono, const Rational& c);

  YPolynomial& operator+=(const YPolynomial& rhs);
  YPolynomial& operator-=(const YPolynomial& rhs);
  YPolynomial& operator*=(const Rational& c);
  friend YPolynomial operator+(YPolynomial a, const YPolynomial& b) { return a += b; }
  friend YPolynomial operator-(YPolynomial a, const YPolynomial& b) { return a -= b; }
  friend YPolynomial operator*(YPolynomial a, const Rational& c) { return a *= c; }

  friend bool operator==(const YPolynomial&, const YPolynomial&) = default;

 private:
  Dims dims_;
  TermMap terms_;
};

/// Normalizes every monomial and merges like terms.
[[nodiscard]] YPolynomial normalize(const YPolynomial& p);

/// Product of two polynomials over the same dims, normalized.
[[nodiscard]] YPolynomial multiply(const YPolynomial& a, const YPolynomial& b);

/// Value of p at the indicator assignment of f. Throws std::invalid_argument on a dims mismatch.
[[nodiscard]] Rational eval_y(const YPolynomial& p, const FunctionTable& f);

[[nodiscard]] Degree degree_y(const YPolynomial& p);

std::ostream& operator<<(std::ostream& os, const YMonomial& mono);
std::ostream& operator<<(std::ostream& os, const YPolynomial& p);
[[nodiscard]] std::string to_string(Degree d);

}  // namespace symdeg
