#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "symdeg/partition.hpp"
#include "symdeg/rational.hpp"
#include "symdeg/ypoly.hpp"

namespace symdeg {

/// Frequency class of a function f:[n] -> [m]: the multiset of z_j = |f^{-1}(j)|.
///
/// Stored canonically as the partition formed by the nonzero frequencies; the
/// m - length() remaining coordinates are implicitly zero.
class FrequencyVector {
 public:
  /// From coordinate counts z_1..z_m (any order, entries >= 0).
  FrequencyVector(int m, std::span<const int> counts);
  /// From a class partition; throws std::invalid_argument if it has more than m parts.
  FrequencyVector(int m, Partition nonzero);

  static FrequencyVector of(const FunctionTable& f);

  [[nodiscard]] int m() const { return m_; }
  [[nodiscard]] int n() const { return nonzero_.weight(); }
  [[nodiscard]] const Partition& nonzero() const { return nonzero_; }
  /// Full coordinate vector of length m, non-increasing.
  [[nodiscard]] std::vector<int> padded() const;

  friend bool operator==(const FrequencyVector&, const FrequencyVector&) = default;

 private:
  int m_;
  Partition nonzero_;
};

/// Value at z of the monomial symmetric polynomial m_lambda in m variables:
/// the sum of every distinct monomial z_{i1}^{l1}...z_{ik}^{lk} over distinct
/// indices. Zero when lambda has more than m parts.
[[nodiscard]] mpz_class eval_msym(const Partition& lambda, const FrequencyVector& z);

/// Symmetric polynomial in z_1..z_m, stored in the monomial symmetric basis.
class SymPolynomial {
 public:
  using CoeffMap = std::map<Partition, Rational>;

  explicit SymPolynomial(int m);
  static SymPolynomial constant(int m, const Rational& c);
  static SymPolynomial basis(int m, const Partition& lambda, const Rational& c = Rational(1));

  [[nodiscard]] int m() const { return m_; }
  [[nodiscard]] const CoeffMap& coeffs() const { return coeffs_; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] Degree degree() const;
  [[nodiscard]] Rational coeff(const Partition& lambda) const;

  /// Adds c * m_lambda. Keys longer than m are the zero element and are dropped.
  void add_term(const Partition& lambda, const Rational& c);

  SymPolynomial& operator+=(const SymPolynomial& rhs);
  SymPolynomial& operator*=(const Rational& c);
  friend SymPolynomial operator+(SymPolynomial a, const SymPolynomial& b) { return a += b; }
  friend SymPolynomial operator*(SymPolynomial a, const Rational& c) { return a *= c; }

  friend bool operator==(const SymPolynomial&, const SymPolynomial&) = default;

 private:
  int m_;
  CoeffMap coeffs_;
};

/// Throws std::invalid_argument if q.m() != z.m().
[[nodiscard]] Rational eval_sym(const SymPolynomial& q, const FrequencyVector& z);

/// General (not necessarily symmetric) polynomial in named variables z_1..z_m.
class ZPolynomial {
 public:
  /// Exponent vector of length m.
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Rational>;

  explicit ZPolynomial(int m);
  static ZPolynomial constant(int m, const Rational& c);
  /// The affine form z_j + c (1-based j).
  static ZPolynomial affine(int m, int j, const Rational& c);

  [[nodiscard]] int m() const { return m_; }
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] Degree degree() const;

  void add_term(Exponents exps, const Rational& c);

  ZPolynomial& operator+=(const ZPolynomial& rhs);
  ZPolynomial& operator*=(const Rational& c);
  friend ZPolynomial operator*(const ZPolynomial& a, const ZPolynomial& b);

  /// Value at the ordered coordinate vector z (size m).
  [[nodiscard]] Rational eval(std::span<const int> z) const;

  friend bool operator==(const ZPolynomial&, const ZPolynomial&) = default;

 private:
  int m_;
  TermMap terms_;
};

/// Average of q over all m! permutations of the variables, in the monomial symmetric basis.
[[nodiscard]] SymPolynomial symmetrize_over_variables(const ZPolynomial& q);

std::ostream& operator<<(std::ostream& os, const SymPolynomial& q);
std::ostream& operator<<(std::ostream& os, const FrequencyVector& z);

}  // namespace symdeg
