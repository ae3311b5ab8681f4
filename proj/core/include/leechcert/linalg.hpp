#pragma once

#include "leechcert/rational.hpp"

#include <vector>

namespace leechcert {

using RationalMatrix = std::vector<std::vector<Rational>>;

/**
 * Solves A x = b exactly for square A.
 *
 * Rows are scaled to integers and reduced by fraction-free (Bareiss)
 * elimination; the only divisions by non-pivots happen in the final
 * back-substitution. Throws SingularMatrix when det(A) = 0 and
 * DimensionMismatch when the shapes disagree.
 */
std::vector<Rational> solve_linear_system(const RationalMatrix& a, const std::vector<Rational>& b);

/** Exact determinant of a square rational matrix (fraction-free). */
Rational determinant(const RationalMatrix& a);

std::vector<Rational> multiply(const RationalMatrix& a, const std::vector<Rational>& x);

}  // namespace leechcert
