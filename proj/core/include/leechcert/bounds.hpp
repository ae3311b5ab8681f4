#pragma once

#include "leechcert/polynomial.hpp"
#include "leechcert/rational.hpp"
#include "leechcert/simplex.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace leechcert {

/**
 * Delsarte certificate f for codes in S^{n-1} with maximal inner product t:
 * f_0 > 0, f_k >= 0 and f <= 0 on [-1, t] give |C| <= f(1)/f_0.
 */
struct SphericalCertificate {
  RationalPolynomial polynomial;
  unsigned dimension = 0;
  Rational threshold;
  std::vector<Rational> expansion;
  Rational bound;
  /** Rational roots of f in [-1, t]: the only inner products a code meeting the bound can have. */
  std::vector<Rational> equality_inner_products;
  /** A code meeting the bound is a spherical design of this strength (the degree of f). */
  unsigned equality_design_strength = 0;
  bool valid = false;
  /** First failed condition when !valid. */
  std::string failure;
};

/** Evaluates every condition without throwing; `valid` and `failure` report the outcome. */
SphericalCertificate inspect_spherical_certificate(const RationalPolynomial& p, unsigned n, const Rational& t);

/** As inspect_spherical_certificate, but throws InvalidCertificate carrying the failed condition. */
SphericalCertificate check_spherical_certificate(const RationalPolynomial& p, unsigned n, const Rational& t);

/**
 * Searches for a certificate of the given degree by an exact LP: with f_0 = 1,
 * minimize sum f_k subject to f_k >= 0, f(s) <= 0 at every node, and f'(s) = 0
 * at nodes strictly inside (-1, t). The LP optimum is re-verified on the whole
 * interval. Throws NoCertificateFound when the LP is infeasible or the
 * candidate fails verification.
 */
SphericalCertificate find_spherical_certificate(unsigned n, const Rational& t, unsigned degree,
                                                const std::vector<Rational>& nodes);

/** The LP solved by find_spherical_certificate (variables f_1..f_degree). */
LinearProgram spherical_certificate_lp(unsigned n, const Rational& t, unsigned degree,
                                       const std::vector<Rational>& nodes);

struct BinaryLpBound {
  /** Exact LP optimum of sum B_i. */
  Rational optimum;
  /** floor(1 + optimum). */
  BigInt bound;
  /** Optimal distance distribution, indexed like the allowed distances (ascending). */
  std::vector<Rational> distribution;
};

/** The Krawtchouk LP: maximize sum B_i subject to -sum_i B_i K_k(i) <= K_k(0), k = 1..n. */
LinearProgram binary_code_lp(unsigned n, const std::set<unsigned>& allowed_distances);

/** Delsarte LP bound for binary codes of length n whose distances lie in the allowed set. */
BinaryLpBound binary_code_lp_bound(unsigned n, const std::set<unsigned>& allowed_distances);

/**
 * Packing bound for constant-weight codes: words of weight w with distance
 * at least d share at most s = w - d/2 ones, so no (s+1)-subset lies in two
 * words and N <= C(n, s+1) / C(w, s+1). Throws InvalidParameters for odd or
 * zero d, w > n, or d > 2w.
 */
BigInt constant_weight_bound(unsigned n, unsigned d, unsigned w);

/**
 * Parses a polynomial: either a comma-separated coefficient list "a0,a1,..."
 * (lowest degree first) or a product of factors such as
 * "(x+1/2)^2*(x+1/8)^2*(x-1/4)". Factors are rationals, x, or (x +- r), each
 * with an optional nonnegative integer exponent. Throws ParseError.
 */
RationalPolynomial parse_polynomial(const std::string& text);

}  // namespace leechcert
