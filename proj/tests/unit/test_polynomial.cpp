#include "leechcert/errors.hpp"
#include "leechcert/polynomial.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace leechcert;

TEST_CASE("gegenbauer polynomials match Gram-Schmidt on sphere moments") {
  for (unsigned n = 3; n <= 24; ++n) {
    const auto ref = oracle::gegenbauer_by_gram_schmidt(n, 10);
    for (unsigned k = 0; k <= 10; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(gegenbauer(n, k) == ref[k]);
    }
  }
}

TEST_CASE("property: gegenbauer orthogonality for degrees up to 10") {
  for (unsigned n : {3U, 8U, 21U, 22U, 23U, 24U}) {
    for (unsigned j = 0; j <= 10; ++j) {
      for (unsigned k = 0; k <= 10; ++k) {
        const Rational ip = oracle::weighted_inner(gegenbauer(n, j), gegenbauer(n, k), n);
        if (j == k) {
          CHECK(ip > 0);
        } else {
          CHECK(ip == 0);
        }
      }
    }
  }
}

TEST_CASE("property: gegenbauer expansion round-trips") {
  oracle::Gen gen(21);
  for (int trial = 0; trial < 120; ++trial) {
    const unsigned n = static_cast<unsigned>(gen.integer(3, 30));
    const unsigned d = static_cast<unsigned>(gen.integer(0, 10));
    const RationalPolynomial p = gen.polynomial(d);
    const auto f = gegenbauer_expand(p, n);
    RationalPolynomial back;
    for (std::size_t k = 0; k < f.size(); ++k) back += gegenbauer(n, static_cast<unsigned>(k)) * f[k];
    CHECK(back == p);
    // Coefficients are also the normalized projections <p, G_k> / <G_k, G_k>.
    for (std::size_t k = 0; k < f.size(); ++k) {
      const auto g = gegenbauer(n, static_cast<unsigned>(k));
      CHECK(f[k] == oracle::weighted_inner(p, g, n) / oracle::weighted_inner(g, g, n));
    }
  }
}

TEST_CASE("krawtchouk polynomials match subset sums") {
  for (unsigned n = 1; n <= 10; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      const auto kp = krawtchouk(n, k);
      for (unsigned x = 0; x <= n; ++x) CHECK(kp(Rational(x)) == oracle::krawtchouk_by_subsets(n, k, x));
    }
  }
}

TEST_CASE("property: divmod and gcd") {
  oracle::Gen gen(3);
  for (int trial = 0; trial < 150; ++trial) {
    const auto a = gen.polynomial(static_cast<unsigned>(gen.integer(0, 8)));
    const auto b = gen.polynomial(static_cast<unsigned>(gen.integer(0, 5)));
    const auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    const auto c = gen.polynomial(static_cast<unsigned>(gen.integer(1, 3)));
    const auto g = gcd(a * c, b * c);
    CHECK(divmod(a * c, g).second.is_zero());
    CHECK(divmod(b * c, g).second.is_zero());
    CHECK(divmod(g, c.monic()).second.is_zero());
  }
  CHECK_THROWS_AS(divmod(RationalPolynomial::monomial(2), RationalPolynomial()), InvalidParameters);
}

TEST_CASE("property: root isolation finds planted rational roots") {
  oracle::Gen gen(8);
  for (int trial = 0; trial < 80; ++trial) {
    std::set<Rational> roots;
    RationalPolynomial p = RationalPolynomial::constant(gen.rational(5, 3) == 0 ? 1 : 2);
    const int count = static_cast<int>(gen.integer(1, 5));
    for (int i = 0; i < count; ++i) {
      const Rational r = gen.rational(8, 6) / 8;
      roots.insert(r);
      p *= RationalPolynomial::linear(-r).pow(static_cast<unsigned>(gen.integer(1, 3)));
    }
    // An irreducible quadratic factor adds no real roots.
    p *= RationalPolynomial({1, 0, 1});
    const std::vector<Rational> expected(roots.begin(), roots.end());
    CHECK(rational_roots_in(p, -1, 1) == expected);
    const auto iso = isolate_roots(p, -2, 2);
    CHECK(iso.size() == roots.size());
    CHECK(count_roots(sturm_sequence(p), -2, 2) == roots.size());
    CHECK(squarefree_part(p).degree() == static_cast<int>(roots.size()) + 2);
  }
}

TEST_CASE("isolate_roots separates irrational roots") {
  // sqrt(2) and sqrt(3) are the two roots in (0, 2).
  const RationalPolynomial p = RationalPolynomial({-2, 0, 1}) * RationalPolynomial({-3, 0, 1});
  const auto iso = isolate_roots(p, 0, 2);
  REQUIRE(iso.size() == 2);
  CHECK(iso[0].upper <= iso[1].lower);
  for (const auto& r : iso) CHECK(p(r.lower) * p(r.upper) < 0);
}

TEST_CASE("nonpositive_on_interval decides sign exactly") {
  // -(x - 1/4)^2 touches zero but never becomes positive.
  const auto touch = -RationalPolynomial::linear(make_rational(-1, 4)).pow(2);
  CHECK(nonpositive_on_interval(touch, -1, 1));
  // x^3 - x/100 is positive just right of 1/10.
  const RationalPolynomial bump({0, make_rational(-1, 100), 0, 1});
  Rational w;
  CHECK_FALSE(nonpositive_on_interval(bump, -1, 1, &w));
  CHECK(bump(w) > 0);
  CHECK(w >= -1);
  CHECK(w <= 1);
}

TEST_CASE("property: nonpositive_on_interval agrees with a dense sample when false") {
  oracle::Gen gen(12);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = gen.polynomial(static_cast<unsigned>(gen.integer(1, 6)));
    Rational w;
    const bool nonpos = nonpositive_on_interval(p, -1, 1, &w);
    bool sample_positive = false;
    for (int i = -200; i <= 200; ++i) sample_positive = sample_positive || p(make_rational(i, 200)) > 0;
    if (sample_positive) CHECK_FALSE(nonpos);
    if (!nonpos) CHECK(p(w) > 0);
  }
}
