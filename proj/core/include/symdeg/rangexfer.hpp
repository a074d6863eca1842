#pragma once

#include <cstdint>
#include <optional>

#include "symdeg/budget.hpp"
#include "symdeg/oracle.hpp"
#include "symdeg/properties.hpp"
#include "symdeg/sympoly.hpp"
#include "symdeg/ypoly.hpp"

namespace symdeg {

/// Q(z_1, ..., z_k, 0, ..., 0) as a polynomial in k = n_target variables:
/// drops basis keys longer than n_target. Requires 1 <= n_target <= q.m().
[[nodiscard]] SymPolynomial restrict_range(const SymPolynomial& q, int n_target);

/// Same coefficient map read over m_target >= q.m() variables.
[[nodiscard]] SymPolynomial extend_range(const SymPolynomial& q, int m_target);

enum class TransferStatus { Verified, Failed, Unverified };

struct TransferResult {
  YPolynomial polynomial;
  TransferStatus status = TransferStatus::Unverified;
  /// Present whenever the output was checked against every function.
  std::optional<Report> report;
};

/// symmetrize -> extend_range -> desymmetrize, lifting an approximator on
/// f:[n] -> [m0] (m0 >= n) to one on f:[n] -> [m_target]. The result is
/// checked against prop at eps when m_target^n fits in budget.
[[nodiscard]] TransferResult transfer_approximation(const YPolynomial& p, const PropertySpec& prop, int m_target,
                                                    const Rational& eps, std::uint64_t budget = default_budget());

}  // namespace symdeg
