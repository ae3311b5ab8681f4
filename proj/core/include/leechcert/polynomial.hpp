#pragma once

#include "leechcert/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace leechcert {

/**
 * Dense univariate polynomial with rational coefficients, lowest degree first.
 *
 * Trailing zero coefficients are stripped on construction, so the stored
 * leading coefficient is nonzero unless the polynomial is zero. The zero
 * polynomial has degree -1.
 */
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);

  static RationalPolynomial constant(const Rational& c);
  /** x + shift */
  static RationalPolynomial linear(const Rational& shift);
  static RationalPolynomial monomial(std::size_t degree, const Rational& c = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /** Coefficient of x^k; zero beyond the degree. */
  Rational coefficient(std::size_t k) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;

  RationalPolynomial derivative() const;
  RationalPolynomial pow(unsigned exponent) const;
  /** Divides by the leading coefficient. The zero polynomial is returned unchanged. */
  RationalPolynomial monic() const;

  RationalPolynomial& operator+=(const RationalPolynomial& rhs);
  RationalPolynomial& operator-=(const RationalPolynomial& rhs);
  RationalPolynomial& operator*=(const RationalPolynomial& rhs);
  RationalPolynomial& operator*=(const Rational& rhs);

  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const Rational& b) { return a *= b; }
  friend RationalPolynomial operator*(const Rational& b, RationalPolynomial a) { return a *= b; }
  RationalPolynomial operator-() const;

  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  std::string to_string() const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/** Quotient and remainder of Euclidean division. Throws InvalidParameters on a zero divisor. */
std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                         const RationalPolynomial& b);
/** Monic greatest common divisor; gcd(0, 0) = 0. */
RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b);
/** p / gcd(p, p'), made monic. Same distinct roots as p, all simple. */
RationalPolynomial squarefree_part(const RationalPolynomial& p);

/**
 * Gegenbauer polynomial of degree k for the sphere in R^n (parameter (n-2)/2),
 * normalized so that its value at 1 is 1.
 */
RationalPolynomial gegenbauer(unsigned n, unsigned k);

/** Coefficients f_0..f_deg with p = sum f_k gegenbauer(n, k). */
std::vector<Rational> gegenbauer_expand(const RationalPolynomial& p, unsigned n);

/** Krawtchouk polynomial K_k(x; n) as a polynomial in x. */
RationalPolynomial krawtchouk(unsigned n, unsigned k);

/** Sturm chain p, p', -rem(p, p'), ... */
std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p);

/**
 * Number of distinct real roots of p in the half-open interval (lo, hi].
 * p must be nonzero.
 */
std::size_t count_roots(const std::vector<RationalPolynomial>& sturm, const Rational& lo,
                        const Rational& hi);

/** Isolating interval (lower, upper) for one real root; lower == upper marks an exact root. */
struct RootInterval {
  Rational lower;
  Rational upper;
  bool exact() const { return lower == upper; }
};

/**
 * Isolates the distinct real roots of p lying strictly inside (lo, hi).
 * Interval endpoints are never roots unless the interval is exact.
 * The result is sorted and pairwise disjoint.
 */
std::vector<RootInterval> isolate_roots(const RationalPolynomial& p, const Rational& lo,
                                        const Rational& hi);

/** All distinct rational roots of p in [lo, hi], ascending. */
std::vector<Rational> rational_roots_in(const RationalPolynomial& p, const Rational& lo,
                                        const Rational& hi);

/**
 * True iff p(s) <= 0 for every real s in [lo, hi], decided exactly.
 * When false and `witness` is given, it receives a rational point with p > 0.
 */
bool nonpositive_on_interval(const RationalPolynomial& p, const Rational& lo, const Rational& hi,
                             Rational* witness = nullptr);

}  // namespace leechcert
