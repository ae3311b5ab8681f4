#include "leechcert/bounds.hpp"

#include "leechcert/errors.hpp"

namespace leechcert {

SphericalCertificate inspect_spherical_certificate(const RationalPolynomial& p, unsigned n, const Rational& t) {
  if (p.degree() < 1) throw InvalidParameters("certificate polynomial must have degree at least 1");
  if (n < 2) throw InvalidParameters("dimension must be at least 2");
  SphericalCertificate cert;
  cert.polynomial = p;
  cert.dimension = n;
  cert.threshold = t;
  cert.expansion = gegenbauer_expand(p, n);
  cert.equality_design_strength = static_cast<unsigned>(p.degree());
  if (cert.expansion[0] <= 0) {
    cert.failure = "f_0 = " + to_string(cert.expansion[0]) + " is not positive";
    return cert;
  }
  cert.bound = p(1) / cert.expansion[0];
  for (std::size_t k = 1; k < cert.expansion.size(); ++k) {
    if (cert.expansion[k] < 0) {
      cert.failure = "f_" + std::to_string(k) + " = " + to_string(cert.expansion[k]) + " is negative";
      return cert;
    }
  }
  Rational witness;
  if (!nonpositive_on_interval(p, -1, t, &witness)) {
    cert.failure = "f(" + to_string(witness) + ") = " + to_string(p(witness)) + " > 0 inside [-1, " + to_string(t) + "]";
    return cert;
  }
  cert.equality_inner_products = rational_roots_in(p, -1, t);
  cert.valid = true;
  return cert;
}

SphericalCertificate check_spherical_certificate(const RationalPolynomial& p, unsigned n, const Rational& t) {
  auto cert = inspect_spherical_certificate(p, n, t);
  if (!cert.valid) throw InvalidCertificate(cert.failure);
  return cert;
}

LinearProgram spherical_certificate_lp(unsigned n, const Rational& t, unsigned degree,
                                       const std::vector<Rational>& nodes) {
  if (degree < 1 || degree > 10) throw InvalidParameters("certificate degree must be in 1..10");
  if (nodes.empty()) throw InvalidParameters("node set must not be empty");
  std::vector<RationalPolynomial> g;
  for (unsigned k = 0; k <= degree; ++k) g.push_back(gegenbauer(n, k));
  LinearProgram lp;
  lp.maximize = false;
  lp.objective.assign(degree, Rational(1));
  for (const auto& s : nodes) {
    if (s < -1 || s > t) throw InvalidParameters("node " + to_string(s) + " lies outside [-1, t]");
    LinearConstraint c;
    for (unsigned k = 1; k <= degree; ++k) c.coefficients.push_back(g[k](s));
    c.relation = Relation::kLessEqual;
    c.rhs = -1;
    lp.constraints.push_back(std::move(c));
    if (s > -1 && s < t) {
      LinearConstraint d;
      for (unsigned k = 1; k <= degree; ++k) d.coefficients.push_back(g[k].derivative()(s));
      d.relation = Relation::kEqual;
      d.rhs = 0;
      lp.constraints.push_back(std::move(d));
    }
  }
  return lp;
}

SphericalCertificate find_spherical_certificate(unsigned n, const Rational& t, unsigned degree,
                                                const std::vector<Rational>& nodes) {
  const LinearProgram lp = spherical_certificate_lp(n, t, degree, nodes);
  const LpResult r = simplex_solve(lp);
  if (r.status != LpStatus::kOptimal) throw NoCertificateFound("certificate LP is " + to_string(r.status));
  RationalPolynomial f = RationalPolynomial::constant(1);
  for (unsigned k = 1; k <= degree; ++k) f += r.x[k - 1] * gegenbauer(n, k);
  auto cert = inspect_spherical_certificate(f, n, t);
  if (!cert.valid) throw NoCertificateFound("LP optimum fails verification: " + cert.failure);
  return cert;
}

LinearProgram binary_code_lp(unsigned n, const std::set<unsigned>& allowed_distances) {
  if (n == 0 || n > 64) throw InvalidParameters("length must be in 1..64");
  for (unsigned d : allowed_distances) {
    if (d < 1 || d > n) throw InvalidParameters("allowed distances must lie in 1..n");
  }
  LinearProgram lp;
  lp.maximize = true;
  lp.objective.assign(allowed_distances.size(), Rational(1));
  for (unsigned k = 1; k <= n; ++k) {
    const RationalPolynomial kk = krawtchouk(n, k);
    LinearConstraint c;
    for (unsigned i : allowed_distances) c.coefficients.push_back(-kk(Rational(i)));
    c.relation = Relation::kLessEqual;
    c.rhs = Rational(binomial(n, k));
    lp.constraints.push_back(std::move(c));
  }
  return lp;
}

BinaryLpBound binary_code_lp_bound(unsigned n, const std::set<unsigned>& allowed_distances) {
  BinaryLpBound out;
  if (allowed_distances.empty()) {
    out.optimum = 0;
    out.bound = 1;
    return out;
  }
  const LinearProgram lp = binary_code_lp(n, allowed_distances);
  const LpResult r = simplex_solve(lp);
  if (r.status != LpStatus::kOptimal) throw Error("binary code LP is " + to_string(r.status));
  out.optimum = r.value;
  out.bound = floor(1 + r.value);
  out.distribution = r.x;
  return out;
}

BigInt constant_weight_bound(unsigned n, unsigned d, unsigned w) {
  if (d == 0 || d % 2 != 0) throw InvalidParameters("minimum distance must be even and positive");
  if (w > n) throw InvalidParameters("weight exceeds length");
  if (d > 2 * w) throw InvalidParameters("minimum distance exceeds twice the weight");
  const unsigned s = w - d / 2;
  return floor(make_rational(binomial(n, s + 1), binomial(w, s + 1)));
}

}  // namespace leechcert
