#include <gtest/gtest.h>

#include <random>

#include "symdeg/degreelp.hpp"
#include "symdeg/oracle.hpp"
#include "symdeg/symmetrize.hpp"
#include "test_support.hpp"

namespace symdeg {
namespace {

TEST(EnumerateFunctions, CountsAndOrder) {
  const auto fs = enumerate_functions(2, 2);
  ASSERT_EQ(fs.size(), 4u);
  EXPECT_EQ(fs[0].values(), (std::vector<int>{1, 1}));
  EXPECT_EQ(fs[1].values(), (std::vector<int>{1, 2}));
  EXPECT_EQ(fs[2].values(), (std::vector<int>{2, 1}));
  EXPECT_EQ(fs[3].values(), (std::vector<int>{2, 2}));
  EXPECT_EQ(enumerate_functions(3, 4).size(), 64u);
  EXPECT_EQ(enumerate_functions(4, 1).size(), 1u);
}

TEST(EnumerateFunctions, Budget) {
  EXPECT_THROW((void)enumerate_functions(3, 4, 63), BudgetExceeded);
  EXPECT_NO_THROW((void)enumerate_functions(3, 4, 64));
  try {
    (void)enumerate_functions(10, 10, 1000);
    FAIL();
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.required(), mpz_class("10000000000"));
  }
}

TEST(VerifyApproximation, ExactElementDistinctness) {
  const SymPolynomial q = SymPolynomial::basis(2, Partition{1, 1});
  const auto r = verify_approximation(q, PropertySpec::element_distinctness(), 2, Rational(0));
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(r.violations.empty());
}

TEST(VerifyApproximation, ConstantHalfFailsTwice) {
  const SymPolynomial half = SymPolynomial::constant(2, Rational(1, 2));
  const auto r = verify_approximation(half, PropertySpec::element_distinctness(), 2, Rational(1, 3));
  EXPECT_FALSE(r.pass);
  ASSERT_EQ(r.violations.size(), 2u);
  EXPECT_EQ(r.violations[0].kind, Violation::Kind::Class);
  // Function level: all four functions violate.
  const auto rf = verify_approximation(desymmetrize(half, {2, 2}), PropertySpec::element_distinctness(), Rational(1, 3));
  EXPECT_FALSE(rf.pass);
  EXPECT_EQ(rf.violations.size(), 4u);
}

TEST(VerifyApproximation, AlwaysOne) {
  const SymPolynomial one = SymPolynomial::constant(4, Rational(1));
  EXPECT_TRUE(verify_approximation(one, PropertySpec::always_one(), 3, Rational(1, 3)).pass);
}

TEST(VerifyApproximation, UndefinedClassesStillBounded) {
  // Collision at n = 3: every class is One or Undefined; 3/2 breaks Q <= 1.
  const SymPolynomial q = SymPolynomial::constant(3, Rational(3, 2));
  const auto r = verify_approximation(q, PropertySpec::collision(), 3, Rational(1, 3));
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.violations.size(), 3u);
}

TEST(VerifyApproximationProperty, ClassAndFunctionPathsAgree) {
  std::mt19937 rng(61);
  const Rational eps(1, 3);
  for (const auto& prop : {PropertySpec::element_distinctness(), PropertySpec::collision()}) {
    for (int n = 2; n <= 3; ++n) {
      for (int m = n; m <= 4; ++m) {
        // Perturbations of the optimum land on both sides of the threshold.
        const SymPolynomial opt = approx_degree(prop, n, m, eps).optimal().optimum;
        for (int trial = 0; trial < 10; ++trial) {
          SymPolynomial q = opt;
          q += testing::random_sym_polynomial(rng, m, n, 2) * Rational(1, 20 * (1 + trial));
          const bool class_pass = verify_approximation(q, prop, n, eps).pass;
          const bool function_pass = verify_approximation(desymmetrize(q, {n, m}), prop, eps).pass;
          EXPECT_EQ(class_pass, function_pass);
        }
      }
    }
  }
}

TEST(VerifyRangeInvariance, ElementDistinctness) {
  const auto r = verify_range_invariance(PropertySpec::element_distinctness(), 3, 6, Rational(1, 3));
  EXPECT_TRUE(r.pass);
  ASSERT_EQ(r.table.size(), 4u);
  for (const auto& row : r.table) EXPECT_EQ(row.degree, r.table.front().degree);
}

TEST(NormalMonomials, Counts) {
  // Degree <= 1 over 2x2: 1 + 4.  Degree 2 adds pairs on distinct rows: 4.
  EXPECT_EQ(normal_monomials({2, 2}, 1).size(), 5u);
  EXPECT_EQ(normal_monomials({2, 2}, 2).size(), 9u);
  for (const auto& mono : normal_monomials({3, 3}, 3)) EXPECT_TRUE(mono.is_normal());
}

// The restriction to symmetric polynomials loses nothing.
TEST(FullBasis, MatchesSymmetricOptimum) {
  for (const auto& prop : {PropertySpec::element_distinctness(), PropertySpec::collision(),
                           PropertySpec::modified_element_distinctness()}) {
    for (int n = 1; n <= 3; ++n) {
      for (int m = n; m <= 3; ++m) {
        for (int d = 0; d <= 2; ++d) {
          EXPECT_EQ(full_basis_eps_min(prop, n, m, d), solve_lp(build_lp(prop, n, m, d)).eps_min)
              << prop.name() << " n=" << n << " m=" << m << " d=" << d;
        }
      }
    }
  }
}

TEST(Growth, ElementDistinctnessDegreeNonDecreasing) {
  int previous = 0;
  for (int n = 2; n <= 6; ++n) {
    const int d = approx_degree(PropertySpec::element_distinctness(), n, n, Rational(1, 3)).degree;
    EXPECT_GE(d, previous);
    previous = d;
  }
}

}  // namespace
}  // namespace symdeg
