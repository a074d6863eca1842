#include "symdeg/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "symdeg/lp.hpp"

namespace symdeg {

namespace {

mpz_class power(int base, int exponent) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exponent));
  return out;
}

void check_value(Report& report, Violation::Kind kind, std::vector<int> input, Label label, const Rational& value,
                 const Rational& eps) {
  Rational lo(0);
  Rational hi(1);
  if (label == Label::One) lo = Rational(1) - eps;
  if (label == Label::Zero) hi = eps;
  if (value < lo) report.violations.push_back({kind, input, label, value, Bound::Lower, lo});
  if (value > hi) report.violations.push_back({kind, std::move(input), label, value, Bound::Upper, hi});
}

void monomials_from(Dims dims, int row, int left, std::vector<Factor>& prefix, std::vector<YMonomial>& out) {
  out.emplace_back(prefix);
  if (left == 0) return;
  for (int i = row; i <= dims.n; ++i) {
    for (int j = 1; j <= dims.m; ++j) {
      prefix.push_back({i, j});
      monomials_from(dims, i + 1, left - 1, prefix, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

void for_each_function(int n, int m, const std::function<void(const FunctionTable&)>& visit, std::uint64_t budget) {
  if (n < 0 || m < 1) throw std::invalid_argument("for_each_function: need n >= 0, m >= 1");
  check_budget("enumerate_functions(" + std::to_string(n) + ", " + std::to_string(m) + ")", power(m, n), budget);
  std::vector<int> values(static_cast<std::size_t>(n), 1);
  for (;;) {
    visit(FunctionTable(n, m, values));
    // Odometer increment, last position fastest.
    int k = n - 1;
    while (k >= 0 && values[static_cast<std::size_t>(k)] == m) values[static_cast<std::size_t>(k--)] = 1;
    if (k < 0) return;
    ++values[static_cast<std::size_t>(k)];
  }
}

std::vector<FunctionTable> enumerate_functions(int n, int m, std::uint64_t budget) {
  std::vector<FunctionTable> out;
  for_each_function(n, m, [&](const FunctionTable& f) { out.push_back(f); }, budget);
  return out;
}

Report verify_approximation(const SymPolynomial& q, const PropertySpec& prop, int n, const Rational& eps) {
  Report report;
  for (const LabeledClass& cls : enumerate_classes(prop, n, q.m())) {
    const Rational value = eval_sym(q, FrequencyVector(q.m(), cls.partition));
    check_value(report, Violation::Kind::Class, cls.partition.parts(), cls.label, value, eps);
  }
  report.pass = report.violations.empty();
  return report;
}

Report verify_approximation(const YPolynomial& p, const PropertySpec& prop, const Rational& eps,
                            std::uint64_t budget) {
  Report report;
  const Dims dims = p.dims();
  for_each_function(
      dims.n, dims.m,
      [&](const FunctionTable& f) {
        const Label label = prop.classify(FrequencyVector::of(f));
        check_value(report, Violation::Kind::Function, f.values(), label, eval_y(p, f), eps);
      },
      budget);
  report.pass = report.violations.empty();
  return report;
}

Report verify_range_invariance(const PropertySpec& prop, int n, int m_max, const Rational& eps) {
  if (m_max < n) throw std::invalid_argument("verify_range_invariance: m_max must be >= n");
  Report report;
  for (int m = n; m <= m_max; ++m) {
    const DegreeCertificate cert = approx_degree(prop, n, m, eps);
    RangeRow row{m, cert.degree, {}};
    for (const DegreeRecord& rec : cert.records) row.eps_min.push_back(rec.eps_min);
    report.table.push_back(std::move(row));
  }
  const int first = report.table.front().degree;
  report.pass = std::all_of(report.table.begin(), report.table.end(),
                            [first](const RangeRow& row) { return row.degree == first; });
  return report;
}

std::vector<YMonomial> normal_monomials(Dims dims, int d) {
  std::vector<YMonomial> out;
  std::vector<Factor> prefix;
  monomials_from(dims, 1, d, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

Rational full_basis_eps_min(const PropertySpec& prop, int n, int m, int d, std::uint64_t budget) {
  const Dims dims{n, m};
  const std::vector<YMonomial> basis = normal_monomials(dims, d);
  const std::size_t eps = basis.size();

  lp::Program prog;
  prog.objective.assign(basis.size() + 1, Rational());
  prog.objective[eps] = Rational(1);
  prog.domains.assign(basis.size() + 1, lp::Domain::Free);
  prog.domains[eps] = lp::Domain::NonNegative;

  for_each_function(
      n, m,
      [&](const FunctionTable& f) {
        std::vector<Rational> row(basis.size() + 1);
        for (std::size_t k = 0; k < basis.size(); ++k) {
          const auto& fs = basis[k].factors();
          const bool fires = std::all_of(fs.begin(), fs.end(), [&](const Factor& y) { return f.indicator(y); });
          row[k] = Rational(fires ? 1 : 0);
        }
        lp::Constraint lower{row, lp::Relation::GreaterEqual, Rational(0)};
        lp::Constraint upper{std::move(row), lp::Relation::LessEqual, Rational(1)};
        switch (prop.classify(FrequencyVector::of(f))) {
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
      },
      budget);

  const lp::Solution sol = lp::solve(prog);
  if (sol.status != lp::Status::Optimal) throw std::logic_error("full_basis_eps_min: LP not solved to optimality");
  return sol.objective;
}

}  // namespace symdeg
