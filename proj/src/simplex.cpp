#include "emc/simplex.hpp"

#include <ostream>
#include <stdexcept>

namespace emc {

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::infeasible: return "infeasible";
    case LpStatus::unbounded: return "unbounded";
  }
  return "?";
}

namespace {

enum class ColumnKind { original, slack, surplus, artificial };

class Tableau {
 public:
  Tableau(const LinearProgram& lp, std::ostream* trace) : trace_(trace) {
    n_ = lp.num_vars;
    m_ = static_cast<int>(lp.constraints.size());
    kinds_.assign(n_, ColumnKind::original);
    flipped_.assign(m_, false);
    unit_col_.assign(m_, -1);
    std::vector<Sense> senses(m_);
    for (int i = 0; i < m_; ++i) {
      const auto& c = lp.constraints[i];
      senses[i] = c.sense;
      if (c.rhs < 0) {
        flipped_[i] = true;
        if (c.sense == Sense::le) senses[i] = Sense::ge;
        else if (c.sense == Sense::ge) senses[i] = Sense::le;
      }
    }
    std::vector<int> surplus_col(m_, -1);
    for (int i = 0; i < m_; ++i) {
      if (senses[i] == Sense::le) {
        unit_col_[i] = add_column(ColumnKind::slack);
      } else if (senses[i] == Sense::ge) {
        surplus_col[i] = add_column(ColumnKind::surplus);
      }
    }
    for (int i = 0; i < m_; ++i)
      if (senses[i] != Sense::le) unit_col_[i] = add_column(ColumnKind::artificial);

    const int cols = static_cast<int>(kinds_.size());
    rows_.assign(m_, std::vector<Rational>(cols));
    rhs_.resize(m_);
    basis_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      const auto& c = lp.constraints[i];
      const int sign = flipped_[i] ? -1 : 1;
      for (const auto& [j, a] : c.terms) {
        if (j < 0 || j >= n_) throw std::invalid_argument("constraint references unknown variable");
        rows_[i][j] += sign * a;
      }
      rhs_[i] = sign * c.rhs;
      rows_[i][unit_col_[i]] = 1;
      if (surplus_col[i] >= 0) rows_[i][surplus_col[i]] = -1;
      basis_[i] = unit_col_[i];
    }
  }

  LpSolution run(const LinearProgram& lp) {
    LpSolution sol;
    const int cols = static_cast<int>(kinds_.size());

    std::vector<Rational> phase1(cols);
    bool any_artificial = false;
    for (int j = 0; j < cols; ++j)
      if (kinds_[j] == ColumnKind::artificial) {
        phase1[j] = -1;
        any_artificial = true;
      }
    if (any_artificial) {
      set_objective(phase1);
      iterate(1, /*allow_artificial=*/true);
      if (value_ < 0) {
        sol.status = LpStatus::infeasible;
        sol.pivots = pivots_;
        return sol;
      }
      drive_out_artificials();
    }

    std::vector<Rational> cost(cols);
    for (int j = 0; j < n_; ++j) {
      const Rational& c = j < static_cast<int>(lp.objective.size()) ? lp.objective[j] : zero_;
      cost[j] = lp.maximize ? c : Rational(-c);
    }
    set_objective(cost);
    if (!iterate(2, /*allow_artificial=*/false)) {
      sol.status = LpStatus::unbounded;
      sol.pivots = pivots_;
      return sol;
    }

    sol.status = LpStatus::optimal;
    sol.value = lp.maximize ? value_ : Rational(-value_);
    sol.x.assign(n_, 0);
    for (int i = 0; i < m_; ++i)
      if (basis_[i] < n_) sol.x[basis_[i]] = rhs_[i];
    sol.duals.resize(m_);
    for (int i = 0; i < m_; ++i) {
      Rational y = reduced_[unit_col_[i]];
      if (flipped_[i]) y = -y;
      sol.duals[i] = lp.maximize ? y : Rational(-y);
    }
    sol.pivots = pivots_;
    return sol;
  }

 private:
  int add_column(ColumnKind kind) {
    kinds_.push_back(kind);
    return static_cast<int>(kinds_.size()) - 1;
  }

  void set_objective(const std::vector<Rational>& cost) {
    const int cols = static_cast<int>(kinds_.size());
    reduced_.assign(cols, 0);
    for (int j = 0; j < cols; ++j) reduced_[j] = -cost[j];
    value_ = 0;
    for (int i = 0; i < m_; ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (int j = 0; j < cols; ++j)
        if (rows_[i][j] != 0) reduced_[j] += cb * rows_[i][j];
      value_ += cb * rhs_[i];
    }
  }

  // Returns false when the objective is unbounded.
  bool iterate(int phase, bool allow_artificial) {
    const int cols = static_cast<int>(kinds_.size());
    while (true) {
      int enter = -1;
      for (int j = 0; j < cols; ++j) {
        if (!allow_artificial && kinds_[j] == ColumnKind::artificial) continue;
        if (reduced_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best_ratio;
      for (int i = 0; i < m_; ++i) {
        if (rows_[i][enter] <= 0) continue;
        Rational ratio = rhs_[i] / rows_[i][enter];
        if (leave < 0 || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
      if (trace_)
        *trace_ << "phase " << phase << " pivot " << pivots_ << " enter " << column_name(enter) << " leave row "
                << leave << " objective " << emc::to_string(value_) << "\n";
    }
  }

  void drive_out_artificials() {
    const int cols = static_cast<int>(kinds_.size());
    for (int i = 0; i < m_; ++i) {
      if (kinds_[basis_[i]] != ColumnKind::artificial) continue;
      for (int j = 0; j < cols; ++j) {
        if (kinds_[j] == ColumnKind::artificial || rows_[i][j] == 0) continue;
        pivot(i, j);
        if (trace_) *trace_ << "drive out row " << i << " enter " << column_name(j) << "\n";
        break;
      }
    }
  }

  void pivot(int r, int c) {
    ++pivots_;
    const int cols = static_cast<int>(kinds_.size());
    auto& prow = rows_[r];
    const Rational inv = 1 / prow[c];
    std::vector<int> nz;
    for (int j = 0; j < cols; ++j)
      if (prow[j] != 0) {
        prow[j] *= inv;
        nz.push_back(j);
      }
    rhs_[r] *= inv;
    for (int i = 0; i < m_; ++i) {
      if (i == r || rows_[i][c] == 0) continue;
      const Rational f = rows_[i][c];
      for (int j : nz) rows_[i][j] -= f * prow[j];
      rhs_[i] -= f * rhs_[r];
    }
    if (reduced_[c] != 0) {
      const Rational f = reduced_[c];
      for (int j : nz) reduced_[j] -= f * prow[j];
      value_ -= f * rhs_[r];
    }
    basis_[r] = c;
  }

  std::string column_name(int j) const {
    switch (kinds_[j]) {
      case ColumnKind::original: return "x" + std::to_string(j);
      case ColumnKind::slack: return "s" + std::to_string(j);
      case ColumnKind::surplus: return "u" + std::to_string(j);
      case ColumnKind::artificial: return "a" + std::to_string(j);
    }
    return "?";
  }

  std::ostream* trace_;
  int n_ = 0;
  int m_ = 0;
  std::vector<ColumnKind> kinds_;
  std::vector<bool> flipped_;
  std::vector<int> unit_col_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<int> basis_;
  std::vector<Rational> reduced_;
  Rational value_;
  std::size_t pivots_ = 0;
  const Rational zero_ = 0;
};

// max c.x, Ax (senses) b, x >= 0  <->  min b.y, A^T y >= c, with y >= 0 on
// <= rows, y <= 0 on >= rows, y free on = rows. The dual is written with
// nonnegative variables (y = u, y = -u, y = u - w) and solved as a
// maximization of -b.y; the primal x is minus the dual's own multipliers.
LpSolution solve_through_dual(const LinearProgram& lp, std::ostream* trace) {
  const int m = static_cast<int>(lp.constraints.size());
  const int n = lp.num_vars;
  const int sign = lp.maximize ? 1 : -1;

  std::vector<int> pos_var(m, -1), neg_var(m, -1);
  int dual_vars = 0;
  for (int i = 0; i < m; ++i) {
    switch (lp.constraints[i].sense) {
      case Sense::le: pos_var[i] = dual_vars++; break;
      case Sense::ge: neg_var[i] = dual_vars++; break;
      case Sense::eq:
        pos_var[i] = dual_vars++;
        neg_var[i] = dual_vars++;
        break;
    }
  }
  LinearProgram dual;
  dual.num_vars = dual_vars;
  dual.maximize = true;
  dual.objective.assign(dual_vars, 0);
  dual.constraints.resize(n);
  for (int j = 0; j < n; ++j) {
    dual.constraints[j].sense = Sense::ge;
    const Rational c = j < static_cast<int>(lp.objective.size()) ? lp.objective[j] : Rational(0);
    dual.constraints[j].rhs = sign * c;
  }
  for (int i = 0; i < m; ++i) {
    const auto& row = lp.constraints[i];
    if (pos_var[i] >= 0) dual.objective[pos_var[i]] = -row.rhs;
    if (neg_var[i] >= 0) dual.objective[neg_var[i]] = row.rhs;
    for (const auto& [j, a] : row.terms) {
      if (j < 0 || j >= n) throw std::invalid_argument("constraint references unknown variable");
      if (pos_var[i] >= 0) dual.constraints[j].terms.emplace_back(pos_var[i], a);
      if (neg_var[i] >= 0) dual.constraints[j].terms.emplace_back(neg_var[i], Rational(-a));
    }
  }

  LpSolution d = solve_primal(dual, trace);
  LpSolution sol;
  sol.pivots = d.pivots;
  if (d.status == LpStatus::unbounded) {
    sol.status = LpStatus::infeasible;
    return sol;
  }
  if (d.status == LpStatus::infeasible) {
    // The primal is unbounded or infeasible; callers here only pose feasible
    // programs, so report the bounded-dual failure as unbounded.
    sol.status = LpStatus::unbounded;
    return sol;
  }
  sol.status = LpStatus::optimal;
  sol.value = sign * -d.value;
  sol.x.resize(n);
  for (int j = 0; j < n; ++j) sol.x[j] = -d.duals[j];
  sol.duals.resize(m);
  for (int i = 0; i < m; ++i) {
    Rational y = 0;
    if (pos_var[i] >= 0) y += d.x[pos_var[i]];
    if (neg_var[i] >= 0) y -= d.x[neg_var[i]];
    sol.duals[i] = sign * y;
  }
  return sol;
}

}  // namespace

LpSolution solve_primal(const LinearProgram& lp, std::ostream* trace) {
  if (lp.num_vars < 0) throw std::invalid_argument("negative variable count");
  Tableau t(lp, trace);
  return t.run(lp);
}

LpSolution solve(const LinearProgram& lp, std::ostream* trace) {
  const auto m = lp.constraints.size();
  if (m > 2 * static_cast<std::size_t>(lp.num_vars) + 8) return solve_through_dual(lp, trace);
  return solve_primal(lp, trace);
}

}  // namespace emc
