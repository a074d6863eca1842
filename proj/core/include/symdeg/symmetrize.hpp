#pragma once

#include <cstdint>
#include <span>

#include "symdeg/budget.hpp"
#include "symdeg/sympoly.hpp"
#include "symdeg/ypoly.hpp"

namespace symdeg {

/// E[I] over functions with a fixed ordered frequency vector (z_1..z_m), as a
/// polynomial in the named variables z_j:
///
///   prod_{l=1..k} (z_{j_l} - s_l) / (n - l + 1),   s_l = #{l' < l : j_{l'} = j_l}.
///
/// The l-th factor is the probability that row i_l maps to j_l given that the
/// previous l - 1 rows are already fixed, leaving n - l + 1 free rows. Throws
/// std::invalid_argument if the monomial is not normal or lies outside dims.
[[nodiscard]] ZPolynomial expectation_polynomial(const YMonomial& mono, Dims dims);

/// expectation_polynomial projected onto the monomial symmetric basis (averaged over S_m).
[[nodiscard]] SymPolynomial symmetrize_monomial(const YMonomial& mono, Dims dims);

/// Symmetric Q with Q(z) = average of P(f) over all f in the frequency class z.
/// degree(Q) <= degree_y(P).
[[nodiscard]] SymPolynomial symmetrize(const YPolynomial& p);

/// Substitutes z_j = y_{1j} + ... + y_{nj} and normalizes, so that
/// eval_y(result, f) = eval_sym(q, freq(f)) for every f. Requires q.m() == dims.m.
[[nodiscard]] YPolynomial desymmetrize(const SymPolynomial& q, Dims dims);

/// Exact average of P over every f whose ordered counts equal z (size m, sum n),
/// by enumeration. Throws BudgetExceeded if the multinomial count exceeds budget.
[[nodiscard]] Rational average_oracle(const YPolynomial& p, std::span<const int> z,
                                      std::uint64_t budget = default_budget());

/// Exact average of P over every f in the frequency class z, by enumeration.
[[nodiscard]] Rational class_average_oracle(const YPolynomial& p, const FrequencyVector& z,
                                            std::uint64_t budget = default_budget());

}  // namespace symdeg
