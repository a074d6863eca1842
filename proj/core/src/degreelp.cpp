#include "symdeg/degreelp.hpp"

#include <algorithm>
#include <stdexcept>

namespace symdeg {

lp::Program LPInstance::program() const {
  const std::size_t width = basis.size() + 1;
  const std::size_t eps = basis.size();
  lp::Program prog;
  prog.objective.assign(width, Rational());
  prog.objective[eps] = Rational(1);
  prog.domains.assign(width, lp::Domain::Free);
  prog.domains[eps] = lp::Domain::NonNegative;

  for (const ClassRow& row : classes) {
    lp::Constraint lower{row.basis_values, lp::Relation::GreaterEqual, Rational(0)};
    lower.coeffs.emplace_back();
    lp::Constraint upper{row.basis_values, lp::Relation::LessEqual, Rational(1)};
    upper.coeffs.emplace_back();
    switch (row.label) {
      case Label::One:
        lower.coeffs[eps] = Rational(1);
        lower.rhs = Rational(1);
        break;
      case Label::Zero:
        upper.coeffs[eps] = Rational(-1);
        upper.rhs = Rational(0);
        break;
      case Label::Undefined:
        break;
    }
    prog.constraints.push_back(std::move(lower));
    prog.constraints.push_back(std::move(upper));
  }
  return prog;
}

LPInstance build_lp(const PropertySpec& prop, int n, int m, int d) {
  if (d < 0) throw std::invalid_argument("build_lp: degree must be non-negative");
  if (n < 1 || m < 1) throw std::invalid_argument("build_lp: n and m must be positive");
  LPInstance inst;
  inst.property = prop.name();
  inst.n = n;
  inst.m = m;
  inst.degree = d;
  inst.basis = partitions_up_to(d, std::min(n, m));
  for (LabeledClass& cls : enumerate_classes(prop, n, m)) {
    const FrequencyVector z(m, cls.partition);
    ClassRow row{std::move(cls.partition), cls.label, {}};
    row.basis_values.reserve(inst.basis.size());
    for (const Partition& lambda : inst.basis) row.basis_values.emplace_back(eval_msym(lambda, z));
    inst.classes.push_back(std::move(row));
  }
  return inst;
}

LPOptimum solve_lp(const LPInstance& inst) {
  const lp::Solution sol = lp::solve(inst.program());
  if (sol.status != lp::Status::Optimal) {
    throw std::logic_error("solve_lp: degree LP for '" + inst.property + "' was not solved to optimality");
  }
  LPOptimum out{sol.values.back(), SymPolynomial(inst.m)};
  for (std::size_t k = 0; k < inst.basis.size(); ++k) out.polynomial.add_term(inst.basis[k], sol.values[k]);
  return out;
}

DegreeCertificate approx_degree(const PropertySpec& prop, int n, int m, const Rational& eps) {
  if (eps.sign() < 0 || eps >= Rational(1, 2)) throw std::invalid_argument("approx_degree: need 0 <= eps < 1/2");
  check_dimensions(prop, n, m);

  DegreeCertificate cert;
  cert.property = prop.name();
  cert.n = n;
  cert.m = m;
  cert.epsilon = eps;

  // Any function of f has an exact multilinear y-representation of degree <= n,
  // and the class count is at least that for m >= n.
  const int cap = std::max<int>(n, static_cast<int>(enumerate_classes(prop, n, m).size()));
  for (int d = 0; d <= cap; ++d) {
    LPOptimum opt = solve_lp(build_lp(prop, n, m, d));
    if (!cert.records.empty() && opt.eps_min > cert.records.back().eps_min) {
      throw std::logic_error("approx_degree: eps_min increased from degree " + std::to_string(d - 1) + " to " +
                             std::to_string(d));
    }
    const bool done = opt.eps_min <= eps;
    cert.records.push_back({d, std::move(opt.eps_min), std::move(opt.polynomial)});
    if (done) {
      cert.degree = d;
      cert.query_lower_bound = (d + 1) / 2;
      return cert;
    }
  }
  throw std::logic_error("approx_degree: no degree up to the interpolation cap reaches eps");
}

}  // namespace symdeg
