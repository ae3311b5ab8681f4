#include "leechcert/simplex.hpp"

#include "leechcert/errors.hpp"

#include <optional>

namespace leechcert {

void LinearProgram::check_shape() const {
  for (const auto& c : constraints) {
    if (c.coefficients.size() != objective.size()) throw DimensionMismatch("constraint row length differs from objective");
  }
}

std::string to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
  }
  return "unknown";
}

namespace {

enum class ColumnKind { kStructural, kSlack, kArtificial };

/**
 * Tableau in equality form A' x' = b' with b' >= 0. Columns: structural,
 * then one slack/surplus per inequality row, then artificials. The row
 * `cost` holds reduced costs of the current phase objective (minimized)
 * and cost.back() holds minus the objective value.
 */
struct Tableau {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<Rational>> t;  // rows x (cols + 1), last entry is the rhs
  std::vector<Rational> cost;            // cols + 1
  std::vector<std::size_t> basis;        // basic column per row
  std::vector<ColumnKind> kind;
  std::vector<std::size_t> initial_basic;  // identity column of each row
  std::vector<int> row_sign;               // +1, or -1 when the row was negated
  std::size_t pivots = 0;

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = t[r][c];
    for (auto& v : t[r]) v /= p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || t[i][c] == 0) continue;
      const Rational f = t[i][c];
      for (std::size_t j = 0; j <= cols; ++j) {
        if (t[r][j] != 0) t[i][j] -= f * t[r][j];
      }
    }
    if (cost[c] != 0) {
      const Rational f = cost[c];
      for (std::size_t j = 0; j <= cols; ++j) {
        if (t[r][j] != 0) cost[j] -= f * t[r][j];
      }
    }
    basis[r] = c;
    ++pivots;
  }

  /** Loads reduced costs for column costs c (size cols) given the current basis. */
  void set_costs(const std::vector<Rational>& c) {
    cost.assign(cols + 1, Rational(0));
    for (std::size_t j = 0; j < cols; ++j) cost[j] = c[j];
    for (std::size_t i = 0; i < rows; ++i) {
      const Rational cb = c[basis[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= cols; ++j) cost[j] -= cb * t[i][j];
    }
  }

  /** Bland's-rule iterations. Returns the unbounded entering column, if any. */
  std::optional<std::size_t> run(const std::vector<bool>& allowed) {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < cols; ++j) {
        if (allowed[j] && cost[j] < 0) {
          enter = j;
          break;
        }
      }
      if (!enter) return std::nullopt;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < rows; ++i) {
        if (t[i][*enter] <= 0) continue;
        const Rational ratio = t[i][cols] / t[i][*enter];
        if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return enter;
      pivot(*leave, *enter);
    }
  }

  std::vector<Rational> primal(std::size_t n) const {
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t i = 0; i < rows; ++i) {
      if (basis[i] < n) x[basis[i]] = t[i][cols];
    }
    return x;
  }

  /** pi_i = c_col - d_col for the initial identity column of row i, mapped back through row negation. */
  std::vector<Rational> multipliers(const std::vector<Rational>& c) const {
    std::vector<Rational> y(rows);
    for (std::size_t i = 0; i < rows; ++i) {
      const std::size_t col = initial_basic[i];
      y[i] = (c[col] - cost[col]) * row_sign[i];
    }
    return y;
  }
};

}  // namespace

LpResult simplex_solve(const LinearProgram& lp) {
  lp.check_shape();
  const std::size_t n = lp.variable_count();
  const std::size_t m = lp.constraints.size();

  Tableau tab;
  tab.rows = m;
  std::size_t slack_count = 0;
  std::size_t art_count = 0;
  for (const auto& c : lp.constraints) {
    if (c.relation != Relation::kEqual) ++slack_count;
  }
  // Rows needing an artificial: >= and = rows after normalizing rhs >= 0, with <= rows flipping to >= when negated.
  std::vector<Relation> rel(m);
  tab.row_sign.assign(m, 1);
  for (std::size_t i = 0; i < m; ++i) {
    rel[i] = lp.constraints[i].relation;
    if (lp.constraints[i].rhs < 0) {
      tab.row_sign[i] = -1;
      if (rel[i] == Relation::kLessEqual) rel[i] = Relation::kGreaterEqual;
      else if (rel[i] == Relation::kGreaterEqual) rel[i] = Relation::kLessEqual;
    }
    if (rel[i] != Relation::kLessEqual) ++art_count;
  }
  tab.cols = n + slack_count + art_count;
  tab.kind.assign(tab.cols, ColumnKind::kStructural);
  tab.t.assign(m, std::vector<Rational>(tab.cols + 1, Rational(0)));
  tab.basis.assign(m, 0);
  tab.initial_basic.assign(m, 0);
  std::size_t next_slack = n;
  std::size_t next_art = n + slack_count;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = lp.constraints[i];
    for (std::size_t j = 0; j < n; ++j) tab.t[i][j] = c.coefficients[j] * tab.row_sign[i];
    tab.t[i][tab.cols] = c.rhs * tab.row_sign[i];
    if (rel[i] != Relation::kEqual) {
      const std::size_t s = next_slack++;
      tab.kind[s] = ColumnKind::kSlack;
      tab.t[i][s] = rel[i] == Relation::kLessEqual ? 1 : -1;
      if (rel[i] == Relation::kLessEqual) tab.basis[i] = s;
    }
    if (rel[i] != Relation::kLessEqual) {
      const std::size_t a = next_art++;
      tab.kind[a] = ColumnKind::kArtificial;
      tab.t[i][a] = 1;
      tab.basis[i] = a;
    }
    tab.initial_basic[i] = tab.basis[i];
  }

  LpResult result;

  // Phase 1: minimize the sum of artificials.
  std::vector<Rational> phase1(tab.cols, Rational(0));
  for (std::size_t j = 0; j < tab.cols; ++j) {
    if (tab.kind[j] == ColumnKind::kArtificial) phase1[j] = 1;
  }
  tab.set_costs(phase1);
  std::vector<bool> allowed(tab.cols, true);
  tab.run(allowed);
  if (-tab.cost[tab.cols] > 0) {
    result.status = LpStatus::kInfeasible;
    // The phase-1 duals pi satisfy pi A <= 0 and pi b > 0; y = -pi is the certificate.
    auto pi = tab.multipliers(phase1);
    for (auto& v : pi) v = -v;
    result.farkas = std::move(pi);
    result.pivots = tab.pivots;
    return result;
  }
  // Drive zero-level artificials out of the basis where possible.
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.kind[tab.basis[i]] != ColumnKind::kArtificial) continue;
    for (std::size_t j = 0; j < tab.cols; ++j) {
      if (tab.kind[j] != ColumnKind::kArtificial && tab.t[i][j] != 0) {
        tab.pivot(i, j);
        break;
      }
    }
  }

  // Phase 2: minimize -c (or c), artificials barred from entering.
  std::vector<Rational> phase2(tab.cols, Rational(0));
  for (std::size_t j = 0; j < n; ++j) phase2[j] = lp.maximize ? -lp.objective[j] : lp.objective[j];
  for (std::size_t j = 0; j < tab.cols; ++j) allowed[j] = tab.kind[j] != ColumnKind::kArtificial;
  tab.set_costs(phase2);
  const auto unbounded = tab.run(allowed);
  result.pivots = tab.pivots;
  result.x = tab.primal(n);
  if (unbounded) {
    result.status = LpStatus::kUnbounded;
    std::vector<Rational> d(n, Rational(0));
    if (*unbounded < n) d[*unbounded] = 1;
    for (std::size_t i = 0; i < m; ++i) {
      if (tab.basis[i] < n) d[tab.basis[i]] = -tab.t[i][*unbounded];
    }
    result.ray = std::move(d);
    return result;
  }
  result.status = LpStatus::kOptimal;
  result.value = objective_value(lp, result.x);
  auto y = tab.multipliers(phase2);
  if (lp.maximize) {
    for (auto& v : y) v = -v;
  }
  result.duals = std::move(y);
  return result;
}

namespace {

Rational row_dot(const std::vector<Rational>& a, const std::vector<Rational>& x) {
  Rational s = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] != 0 && x[j] != 0) s += a[j] * x[j];
  }
  return s;
}

}  // namespace

bool satisfies_constraints(const LinearProgram& lp, const std::vector<Rational>& x) {
  if (x.size() != lp.variable_count()) return false;
  for (const auto& v : x) {
    if (v < 0) return false;
  }
  for (const auto& c : lp.constraints) {
    const Rational lhs = row_dot(c.coefficients, x);
    switch (c.relation) {
      case Relation::kLessEqual:
        if (lhs > c.rhs) return false;
        break;
      case Relation::kGreaterEqual:
        if (lhs < c.rhs) return false;
        break;
      case Relation::kEqual:
        if (lhs != c.rhs) return false;
        break;
    }
  }
  return true;
}

Rational objective_value(const LinearProgram& lp, const std::vector<Rational>& x) { return row_dot(lp.objective, x); }

bool verify_farkas(const LinearProgram& lp, const std::vector<Rational>& y) {
  if (y.size() != lp.constraints.size()) return false;
  Rational yb = 0;
  std::vector<Rational> ya(lp.variable_count(), Rational(0));
  for (std::size_t i = 0; i < y.size(); ++i) {
    const auto& c = lp.constraints[i];
    if (c.relation == Relation::kLessEqual && y[i] < 0) return false;
    if (c.relation == Relation::kGreaterEqual && y[i] > 0) return false;
    yb += y[i] * c.rhs;
    for (std::size_t j = 0; j < ya.size(); ++j) ya[j] += y[i] * c.coefficients[j];
  }
  for (const auto& v : ya) {
    if (v < 0) return false;
  }
  return yb < 0;
}

}  // namespace leechcert
