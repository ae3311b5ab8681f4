#pragma once

#include "leechcert/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace leechcert {

enum class Relation { kLessEqual, kGreaterEqual, kEqual };

struct LinearConstraint {
  std::vector<Rational> coefficients;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

/** Linear program over nonnegative variables x >= 0. */
struct LinearProgram {
  bool maximize = true;
  std::vector<Rational> objective;
  std::vector<LinearConstraint> constraints;

  std::size_t variable_count() const { return objective.size(); }
  /** Throws DimensionMismatch when a constraint row has the wrong length. */
  void check_shape() const;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };
std::string to_string(LpStatus status);

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  /** Objective value at the optimum (kOptimal only). */
  Rational value;
  std::vector<Rational> x;
  /** Row multipliers y with y^T b = value and y^T A bounding the objective (kOptimal). */
  std::vector<Rational> duals;
  /**
   * kInfeasible: y with y^T A >= 0 and y^T b < 0, where y_i >= 0 on <= rows,
   * y_i <= 0 on >= rows and free on = rows.
   */
  std::vector<Rational> farkas;
  /** kUnbounded: a feasible x together with a direction d >= 0, A d respecting the relations, improving the objective. */
  std::vector<Rational> ray;
  std::size_t pivots = 0;
};

/**
 * Exact two-phase primal simplex on a dense rational tableau. Pivoting uses
 * Bland's rule (lowest-index entering and leaving variables), so it
 * terminates on degenerate problems.
 */
LpResult simplex_solve(const LinearProgram& lp);

/** True iff x >= 0 and every constraint holds exactly. */
bool satisfies_constraints(const LinearProgram& lp, const std::vector<Rational>& x);

/** Objective value c^T x. */
Rational objective_value(const LinearProgram& lp, const std::vector<Rational>& x);

/** Checks a Farkas certificate returned for an infeasible program. */
bool verify_farkas(const LinearProgram& lp, const std::vector<Rational>& y);

}  // namespace leechcert
