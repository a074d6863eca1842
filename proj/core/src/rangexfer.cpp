#include "symdeg/rangexfer.hpp"

#include <stdexcept>

#include "symdeg/symmetrize.hpp"

namespace symdeg {

SymPolynomial restrict_range(const SymPolynomial& q, int n_target) {
  if (n_target <= 0) throw std::invalid_argument("restrict: target variable count must be positive");
  if (n_target > q.m()) {
    throw std::invalid_argument("restrict: target " + std::to_string(n_target) + " exceeds variable count " +
                                std::to_string(q.m()));
  }
  SymPolynomial out(n_target);
  for (const auto& [lambda, c] : q.coeffs()) out.add_term(lambda, c);
  return out;
}

SymPolynomial extend_range(const SymPolynomial& q, int m_target) {
  if (m_target < q.m()) {
    throw std::invalid_argument("extend: target " + std::to_string(m_target) + " is below variable count " +
                                std::to_string(q.m()));
  }
  SymPolynomial out(m_target);
  for (const auto& [lambda, c] : q.coeffs()) out.add_term(lambda, c);
  return out;
}

TransferResult transfer_approximation(const YPolynomial& p, const PropertySpec& prop, int m_target,
                                      const Rational& eps, std::uint64_t budget) {
  const Dims dims = p.dims();
  if (dims.m < dims.n) throw std::invalid_argument("transfer_approximation: source range must be at least n");
  const SymPolynomial lifted = extend_range(symmetrize(p), m_target);
  TransferResult result{desymmetrize(lifted, {dims.n, m_target}), TransferStatus::Unverified, std::nullopt};
  try {
    Report report = verify_approximation(result.polynomial, prop, eps, budget);
    result.status = report.pass ? TransferStatus::Verified : TransferStatus::Failed;
    result.report = std::move(report);
  } catch (const BudgetExceeded&) {
    result.status = TransferStatus::Unverified;
  }
  return result;
}

}  // namespace symdeg
