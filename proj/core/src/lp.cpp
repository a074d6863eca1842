#include "symdeg/lp.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace symdeg::lp {

namespace {

// Dense tableau for  min c.x, A x = b, x >= 0, b >= 0.
class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs, std::vector<std::size_t> basis)
      : a_(std::move(rows)), b_(std::move(rhs)), basis_(std::move(basis)) {}

  [[nodiscard]] std::size_t rows() const { return a_.size(); }
  [[nodiscard]] std::size_t cols() const { return a_.empty() ? 0 : a_.front().size(); }
  [[nodiscard]] const std::vector<std::size_t>& basis() const { return basis_; }
  [[nodiscard]] const Rational& at(std::size_t r, std::size_t c) const { return a_[r][c]; }
  [[nodiscard]] const Rational& rhs(std::size_t r) const { return b_[r]; }
  [[nodiscard]] std::size_t pivots() const { return pivots_; }

  // Runs simplex on cost vector `cost` restricted to columns [0, active_cols).
  // Returns false if unbounded.
  bool optimize(const std::vector<Rational>& cost, std::size_t active_cols) {
    for (;;) {
      const auto reduced = reduced_costs(cost, active_cols);
      std::optional<std::size_t> entering;
      for (std::size_t c = 0; c < active_cols; ++c) {
        if (reduced[c].sign() < 0) {
          entering = c;
          break;
        }
      }
      if (!entering) return true;
      std::optional<std::size_t> leaving;
      Rational best;
      for (std::size_t r = 0; r < rows(); ++r) {
        if (a_[r][*entering].sign() <= 0) continue;
        Rational ratio = b_[r] / a_[r][*entering];
        if (!leaving || ratio < best || (ratio == best && basis_[r] < basis_[*leaving])) {
          leaving = r;
          best = std::move(ratio);
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    ++pivots_;
    const Rational inv = Rational(1) / a_[r][c];
    for (auto& x : a_[r]) {
      if (!x.is_zero()) x *= inv;
    }
    b_[r] *= inv;
    for (std::size_t k = 0; k < rows(); ++k) {
      if (k == r || a_[k][c].is_zero()) continue;
      const Rational factor = a_[k][c];
      for (std::size_t j = 0; j < cols(); ++j) {
        if (!a_[r][j].is_zero()) a_[k][j] -= factor * a_[r][j];
      }
      b_[k] -= factor * b_[r];
    }
    basis_[r] = c;
  }

  void drop_row(std::size_t r) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
    b_.erase(b_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  [[nodiscard]] Rational objective(const std::vector<Rational>& cost) const {
    Rational z;
    for (std::size_t r = 0; r < rows(); ++r) z += cost[basis_[r]] * b_[r];
    return z;
  }

 private:
  [[nodiscard]] std::vector<Rational> reduced_costs(const std::vector<Rational>& cost, std::size_t active_cols) const {
    std::vector<Rational> d(cost.begin(), cost.begin() + static_cast<std::ptrdiff_t>(active_cols));
    for (std::size_t r = 0; r < rows(); ++r) {
      const Rational& cb = cost[basis_[r]];
      if (cb.is_zero()) continue;
      for (std::size_t c = 0; c < active_cols; ++c) {
        if (!a_[r][c].is_zero()) d[c] -= cb * a_[r][c];
      }
    }
    return d;
  }

  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> b_;
  std::vector<std::size_t> basis_;
  std::size_t pivots_ = 0;
};

}  // namespace

Solution solve(const Program& program) {
  const std::size_t nvars = program.variable_count();
  if (program.domains.size() != nvars) throw std::invalid_argument("lp::solve: domains size != objective size");
  for (const auto& con : program.constraints) {
    if (con.coeffs.size() != nvars) throw std::invalid_argument("lp::solve: constraint width != objective size");
  }

  // Column layout: structural columns (free variables split into +/- parts),
  // then one slack per inequality, then one artificial per row that needs it.
  std::vector<std::size_t> pos_col(nvars);
  std::vector<std::optional<std::size_t>> neg_col(nvars);
  std::size_t ncols = 0;
  for (std::size_t k = 0; k < nvars; ++k) {
    pos_col[k] = ncols++;
    if (program.domains[k] == Domain::Free) neg_col[k] = ncols++;
  }
  std::vector<std::optional<std::size_t>> slack_col(program.constraints.size());
  for (std::size_t r = 0; r < program.constraints.size(); ++r) {
    if (program.constraints[r].relation != Relation::Equal) slack_col[r] = ncols++;
  }
  const std::size_t first_artificial = ncols;

  const std::size_t nrows = program.constraints.size();
  std::vector<std::vector<Rational>> rows(nrows);
  std::vector<Rational> rhs(nrows);
  std::vector<std::optional<std::size_t>> basic(nrows);
  std::size_t artificials = 0;
  for (std::size_t r = 0; r < nrows; ++r) {
    const Constraint& con = program.constraints[r];
    auto& row = rows[r];
    row.assign(first_artificial, Rational());
    for (std::size_t k = 0; k < nvars; ++k) {
      row[pos_col[k]] = con.coeffs[k];
      if (neg_col[k]) row[*neg_col[k]] = -con.coeffs[k];
    }
    if (slack_col[r]) row[*slack_col[r]] = Rational(con.relation == Relation::LessEqual ? 1 : -1);
    rhs[r] = con.rhs;
    if (rhs[r].sign() < 0) {
      for (auto& x : row) x = -x;
      rhs[r] = -rhs[r];
    }
    if (slack_col[r] && row[*slack_col[r]] == Rational(1)) {
      basic[r] = *slack_col[r];
    } else {
      ++artificials;
    }
  }
  const std::size_t total_cols = first_artificial + artificials;
  std::vector<std::size_t> basis(nrows);
  std::size_t next_artificial = first_artificial;
  for (std::size_t r = 0; r < nrows; ++r) {
    rows[r].resize(total_cols, Rational());
    if (basic[r]) {
      basis[r] = *basic[r];
    } else {
      rows[r][next_artificial] = Rational(1);
      basis[r] = next_artificial++;
    }
  }

  Tableau t(std::move(rows), std::move(rhs), std::move(basis));
  Solution sol;

  if (artificials > 0) {
    std::vector<Rational> phase1(total_cols, Rational());
    for (std::size_t c = first_artificial; c < total_cols; ++c) phase1[c] = Rational(1);
    t.optimize(phase1, total_cols);
    if (t.objective(phase1).sign() > 0) {
      sol.status = Status::Infeasible;
      sol.pivots = t.pivots();
      return sol;
    }
    // Drive remaining (zero-valued) artificials out of the basis; rows where
    // that is impossible are redundant.
    for (std::size_t r = t.rows(); r-- > 0;) {
      if (t.basis()[r] < first_artificial) continue;
      std::optional<std::size_t> col;
      for (std::size_t c = 0; c < first_artificial; ++c) {
        if (!t.at(r, c).is_zero()) {
          col = c;
          break;
        }
      }
      if (col) {
        t.pivot(r, *col);
      } else {
        t.drop_row(r);
      }
    }
  }

  std::vector<Rational> cost(total_cols, Rational());
  for (std::size_t k = 0; k < nvars; ++k) {
    cost[pos_col[k]] = program.objective[k];
    if (neg_col[k]) cost[*neg_col[k]] = -program.objective[k];
  }
  if (!t.optimize(cost, first_artificial)) {
    sol.status = Status::Unbounded;
    sol.pivots = t.pivots();
    return sol;
  }

  std::vector<Rational> x(total_cols, Rational());
  for (std::size_t r = 0; r < t.rows(); ++r) x[t.basis()[r]] = t.rhs(r);
  sol.status = Status::Optimal;
  sol.values.resize(nvars);
  for (std::size_t k = 0; k < nvars; ++k) {
    sol.values[k] = x[pos_col[k]];
    if (neg_col[k]) sol.values[k] -= x[*neg_col[k]];
  }
  sol.objective = t.objective(cost);
  sol.pivots = t.pivots();
  return sol;
}

}  // namespace symdeg::lp
