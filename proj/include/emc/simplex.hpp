#pragma once

#include "emc/rational.hpp"

#include <cstddef>
#include <iosfwd>
#include <utility>
#include <vector>

namespace emc {

enum class Sense { le, ge, eq };

struct Constraint {
  std::vector<std::pair<int, Rational>> terms;  // (variable index, coefficient)
  Sense sense = Sense::le;
  Rational rhs;
};

/// Optimize objective . x subject to the constraints and x >= 0.
struct LinearProgram {
  int num_vars = 0;
  std::vector<Rational> objective;
  bool maximize = true;
  std::vector<Constraint> constraints;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  std::vector<Rational> x;
  /// One multiplier per constraint. For a maximization they satisfy
  /// duals . rhs = value and A^T duals >= objective, with duals >= 0 on
  /// <= rows and <= 0 on >= rows; signs mirror for a minimization.
  std::vector<Rational> duals;
  std::size_t pivots = 0;
};

/// Two-phase dense tableau simplex over exact rationals with Bland's rule.
/// Programs with many more constraints than variables are solved through
/// their dual so the tableau stays short. Pivots are logged to `trace`.
LpSolution solve(const LinearProgram& lp, std::ostream* trace = nullptr);

/// The same, never dualizing.
LpSolution solve_primal(const LinearProgram& lp, std::ostream* trace = nullptr);

const char* to_string(LpStatus status);

}  // namespace emc
