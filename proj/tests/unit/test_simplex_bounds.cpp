#include "leechcert/bounds.hpp"
#include "leechcert/combinatorics.hpp"
#include "leechcert/errors.hpp"
#include "leechcert/simplex.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace leechcert;

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/** Weak-duality certificate: the multipliers bound the objective and reproduce the optimum. */
void check_duals(const LinearProgram& lp, const LpResult& r) {
  REQUIRE(r.duals.size() == lp.constraints.size());
  std::vector<Rational> rhs;
  for (const auto& c : lp.constraints) rhs.push_back(c.rhs);
  CHECK(dot(r.duals, rhs) == r.value);
  for (std::size_t j = 0; j < lp.variable_count(); ++j) {
    Rational col = 0;
    for (std::size_t i = 0; i < lp.constraints.size(); ++i) col += r.duals[i] * lp.constraints[i].coefficients[j];
    if (lp.maximize) {
      CHECK(col >= lp.objective[j]);
    } else {
      CHECK(col <= lp.objective[j]);
    }
  }
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    const auto rel = lp.constraints[i].relation;
    const int sign = lp.maximize ? 1 : -1;
    if (rel == Relation::kLessEqual) CHECK(sign * r.duals[i] >= 0);
    if (rel == Relation::kGreaterEqual) CHECK(sign * r.duals[i] <= 0);
  }
}

}  // namespace

TEST_CASE("property: simplex optimum is feasible, plugs back and matches vertex enumeration") {
  oracle::Gen gen(2024);
  int optimal = 0, infeasible = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const LinearProgram lp = gen.linear_program(2, static_cast<unsigned>(gen.integer(1, 5)), true);
    const LpResult r = simplex_solve(lp);
    const auto ref = oracle::two_variable_lp_by_vertices(lp);
    REQUIRE(r.status != LpStatus::kUnbounded);
    if (r.status == LpStatus::kOptimal) {
      ++optimal;
      CHECK(satisfies_constraints(lp, r.x));
      CHECK(objective_value(lp, r.x) == r.value);
      REQUIRE(ref.has_value());
      CHECK(*ref == r.value);
      check_duals(lp, r);
    } else {
      ++infeasible;
      CHECK_FALSE(ref.has_value());
      CHECK(verify_farkas(lp, r.farkas));
    }
  }
  CHECK(optimal > 50);
  CHECK(infeasible > 5);
}

TEST_CASE("property: larger random programs keep plug-back feasibility and duality") {
  oracle::Gen gen(77);
  for (int trial = 0; trial < 150; ++trial) {
    const unsigned vars = static_cast<unsigned>(gen.integer(2, 7));
    const LinearProgram lp = gen.linear_program(vars, static_cast<unsigned>(gen.integer(1, 7)), gen.integer(0, 3) > 0);
    const LpResult r = simplex_solve(lp);
    if (r.status == LpStatus::kOptimal) {
      CHECK(satisfies_constraints(lp, r.x));
      CHECK(objective_value(lp, r.x) == r.value);
      check_duals(lp, r);
    } else if (r.status == LpStatus::kInfeasible) {
      CHECK(verify_farkas(lp, r.farkas));
    } else {
      // Feasible point plus an improving recession direction.
      REQUIRE(r.ray.size() == vars);
      CHECK(satisfies_constraints(lp, r.x));
      LinearProgram homogeneous = lp;
      for (auto& c : homogeneous.constraints) c.rhs = 0;
      CHECK(satisfies_constraints(homogeneous, r.ray));
      const Rational gain = objective_value(lp, r.ray);
      CHECK((lp.maximize ? gain > 0 : gain < 0));
    }
  }
}

TEST_CASE("degenerate cycling-prone program terminates at the optimum") {
  // A classic example on which the largest-coefficient rule cycles.
  LinearProgram lp;
  lp.maximize = true;
  lp.objective = {make_rational(3, 4), -20, make_rational(1, 2), -6};
  lp.constraints = {
      {{make_rational(1, 4), -8, -1, 9}, Relation::kLessEqual, 0},
      {{make_rational(1, 2), -12, make_rational(-1, 2), 3}, Relation::kLessEqual, 0},
      {{0, 0, 1, 0}, Relation::kLessEqual, 1},
  };
  const LpResult r = simplex_solve(lp);
  REQUIRE(r.status == LpStatus::kOptimal);
  CHECK(r.value == make_rational(5, 4));
  CHECK(satisfies_constraints(lp, r.x));
}

TEST_CASE("simplex rejects malformed programs") {
  LinearProgram lp;
  lp.objective = {1, 1};
  lp.constraints = {{{1}, Relation::kLessEqual, 1}};
  CHECK_THROWS_AS(simplex_solve(lp), DimensionMismatch);
}

TEST_CASE("spherical certificate for the 891 code") {
  const auto p = parse_polynomial("(x+1/2)^2*(x+1/8)^2*(x-1/4)");
  const auto c = check_spherical_certificate(p, 22, make_rational(1, 4));
  CHECK(c.valid);
  CHECK(c.bound == 891);
  CHECK(c.equality_inner_products == std::vector<Rational>{make_rational(-1, 2), make_rational(-1, 8), make_rational(1, 4)});
  CHECK(c.equality_design_strength == 5);
  // Independent evaluation of f(1)/f_0 with f_0 = E[f].
  Rational mean = 0;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    mean += p.coefficients()[i] * oracle::sphere_coordinate_moment(22, static_cast<unsigned>(i));
  }
  CHECK(p(Rational(1)) / mean == 891);
}

TEST_CASE("invalid certificates are reported with the failed condition") {
  // Positive on (1/4, ...) part of [-1, t] when t is larger.
  const auto p = parse_polynomial("(x+1/2)^2*(x+1/8)^2*(x-1/4)");
  const auto bad = inspect_spherical_certificate(p, 22, make_rational(1, 3));
  CHECK_FALSE(bad.valid);
  CHECK_FALSE(bad.failure.empty());
  CHECK_THROWS_AS(check_spherical_certificate(p, 22, make_rational(1, 3)), InvalidCertificate);
  // Negative Gegenbauer coefficient.
  const auto neg = inspect_spherical_certificate(parse_polynomial("-1,0,1"), 22, make_rational(1, 4));
  CHECK_FALSE(neg.valid);
}

TEST_CASE("certificate search reaches 4600 in dimension 23") {
  const std::vector<Rational> nodes{-1, make_rational(-1, 3), 0, make_rational(1, 3)};
  const auto c = find_spherical_certificate(23, make_rational(1, 3), 7, nodes);
  CHECK(c.valid);
  CHECK(c.bound == 4600);
  const auto again = check_spherical_certificate(c.polynomial, 23, make_rational(1, 3));
  CHECK(again.bound == 4600);
  const auto lp = spherical_certificate_lp(23, make_rational(1, 3), 7, nodes);
  CHECK(lp.variable_count() == 7);
}

TEST_CASE("certificate search fails cleanly when no certificate exists") {
  CHECK_THROWS_AS(find_spherical_certificate(23, make_rational(1, 3), 1, {make_rational(1, 3)}), NoCertificateFound);
}

TEST_CASE("binary LP bounds") {
  std::set<unsigned> a;
  for (unsigned d = 8; d <= 16; ++d) a.insert(d);
  const auto b21 = binary_code_lp_bound(21, a);
  CHECK(b21.bound == 512);
  std::set<unsigned> c;
  for (unsigned d = 8; d <= 22; ++d) c.insert(d);
  CHECK(binary_code_lp_bound(22, c).bound == 1024);
  // Hamming code: length 7, distance >= 3.
  CHECK(binary_code_lp_bound(7, {3, 4, 5, 6, 7}).bound == 16);
  // The optimal distance distribution satisfies its own LP.
  const LinearProgram lp = binary_code_lp(21, a);
  CHECK(satisfies_constraints(lp, b21.distribution));
}

TEST_CASE("property: binary LP bound is monotone in the allowed distance set") {
  oracle::Gen gen(99);
  for (int trial = 0; trial < 40; ++trial) {
    const unsigned n = static_cast<unsigned>(gen.integer(4, 12));
    std::set<unsigned> small, large;
    for (unsigned d = 1; d <= n; ++d) {
      const auto roll = gen.integer(0, 2);
      if (roll == 0) small.insert(d);
      if (roll <= 1) large.insert(d);
    }
    if (small.empty()) small.insert(n);
    large.insert(small.begin(), small.end());
    const auto bs = binary_code_lp_bound(n, small);
    const auto bl = binary_code_lp_bound(n, large);
    CHECK(bs.optimum <= bl.optimum);
    CHECK(bl.bound <= BigInt(1) << n);
  }
}

TEST_CASE("property: binary LP bound dominates actual codes") {
  // Even-weight code and repetition-style codes of small length, checked by brute force.
  oracle::Gen gen(5);
  for (int trial = 0; trial < 30; ++trial) {
    const unsigned n = static_cast<unsigned>(gen.integer(4, 10));
    std::vector<std::uint64_t> rows;
    for (int r = 0; r < gen.integer(1, 4); ++r) rows.push_back(static_cast<std::uint64_t>(gen.integer(1, (1 << n) - 1)));
    const auto words = oracle::span_by_enumeration(rows);
    std::set<unsigned> dists;
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = i + 1; j < words.size(); ++j) dists.insert(static_cast<unsigned>(__builtin_popcountll(words[i] ^ words[j])));
    }
    if (dists.empty()) continue;
    CHECK(binary_code_lp_bound(n, dists).bound >= words.size());
  }
}

TEST_CASE("constant-weight packing bound") {
  CHECK(constant_weight_bound(21, 8, 5) == 21);
  CHECK(constant_weight_bound(22, 8, 6) == 77);
  CHECK(constant_weight_bound(24, 8, 8) == 759);
  for (unsigned n = 4; n <= 20; ++n) {
    for (unsigned w = 1; w <= n; ++w) {
      for (unsigned d = 2; d <= 2 * w; d += 2) {
        const unsigned s = w - d / 2;
        CHECK(constant_weight_bound(n, d, w) == oracle::binom(n, s + 1) / oracle::binom(w, s + 1));
      }
    }
  }
  CHECK_THROWS_AS(constant_weight_bound(10, 3, 4), InvalidParameters);
  CHECK_THROWS_AS(constant_weight_bound(10, 4, 11), InvalidParameters);
  CHECK_THROWS_AS(constant_weight_bound(10, 10, 4), InvalidParameters);
}

TEST_CASE("polynomial expressions") {
  CHECK(parse_polynomial("1,2,3") == RationalPolynomial({1, 2, 3}));
  CHECK(parse_polynomial("(x-1/2)^2") == RationalPolynomial({make_rational(1, 4), -1, 1}));
  CHECK(parse_polynomial("3*x^2*(x+1)") == RationalPolynomial({0, 0, 3, 3}));
  CHECK(parse_polynomial("-1/2,0,1") == RationalPolynomial({make_rational(-1, 2), 0, 1}));
  for (const char* bad : {"(x+", "x^", "x^-1", "(x+0.5)", "y", "1,,2", "(x+1)(x+2)", ""}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_polynomial(bad), ParseError);
  }
}
