#pragma once

#include "leechcert/codes.hpp"
#include "leechcert/leech.hpp"
#include "leechcert/polynomial.hpp"
#include "leechcert/rational.hpp"
#include "leechcert/simplex.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

/**
 * Independent reference computations for the tests. Nothing here calls the
 * library routine it is used to check.
 */
namespace oracle {

using leechcert::BigInt;
using leechcert::Rational;
using leechcert::RationalPolynomial;

/** E[x^m] for x the first coordinate of a uniform point on S^{n-1}. */
Rational sphere_coordinate_moment(unsigned n, unsigned m);

/** <p, q> = E[p(x) q(x)] under the same measure. */
Rational weighted_inner(const RationalPolynomial& p, const RationalPolynomial& q, unsigned n);

/** Orthogonal polynomials for that measure by Gram-Schmidt on 1, x, x^2, ...; scaled to 1 at x = 1. */
std::vector<RationalPolynomial> gegenbauer_by_gram_schmidt(unsigned n, unsigned k_max);

/** Pascal's triangle. */
BigInt binom(unsigned n, unsigned k);

/** sum over k-subsets S of {0..n-1} of (-1)^{|S cap {0..x-1}|}. */
std::int64_t krawtchouk_by_subsets(unsigned n, unsigned k, unsigned x);

/** All 2^r combinations of the generator rows. */
std::vector<std::uint64_t> span_by_enumeration(const std::vector<std::uint64_t>& rows);

/** GF(2) rank by plain Gaussian elimination on a copy. */
std::size_t rank_by_elimination(std::vector<std::uint64_t> rows);

/**
 * Leech membership in the scaled coordinates used by the library: all
 * coordinates of one parity m; the positions with x_i = 2 (mod 4) for m = 0,
 * or x_i = 1 (mod 4) for m = 1, form a word of `golay`; the sum is 4m mod 8.
 */
bool leech_member(const leechcert::ScaledVector& v, const std::set<std::uint64_t>& golay);

/** Projected inner product of two members computed from the explicit anchor projections. */
Rational projected_inner_explicit(const leechcert::DerivedCode& code, const leechcert::ScaledVector& x,
                                  const leechcert::ScaledVector& y);

/** Spectrum by a double loop over members with explicit projection. */
leechcert::Spectrum spectrum_by_pairs(const leechcert::DerivedCode& code);

/** Members k with <x, u_k> = alpha and <y, u_k> = beta, by direct count. */
std::uint64_t intersection_by_count(const leechcert::DerivedCode& code, const leechcert::ScaledVector& x,
                                    const leechcert::ScaledVector& y, const Rational& alpha, const Rational& beta);

/**
 * Optimum of a two-variable LP by enumerating vertices (intersections of
 * constraint lines and axes). nullopt when infeasible. Unboundedness must be
 * excluded by the caller (e.g. by a box constraint).
 */
std::optional<Rational> two_variable_lp_by_vertices(const leechcert::LinearProgram& lp);

/** Property-test generators. */
struct Gen {
  explicit Gen(std::uint64_t seed) : rng(seed) {}
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  Rational rational(std::int64_t max_num, std::int64_t max_den);
  RationalPolynomial polynomial(unsigned degree, std::int64_t max_num = 9, std::int64_t max_den = 5);
  /** Random LP with `vars` variables; a box row x_1 + ... + x_n <= B keeps it bounded when `boxed`. */
  leechcert::LinearProgram linear_program(unsigned vars, unsigned rows, bool boxed);
  std::mt19937_64 rng;
};

}  // namespace oracle
