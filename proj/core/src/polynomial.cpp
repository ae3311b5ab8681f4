#include "leechcert/polynomial.hpp"

#include "leechcert/errors.hpp"

#include <algorithm>
#include <sstream>

namespace leechcert {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  normalize();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) { return RationalPolynomial({c}); }

RationalPolynomial RationalPolynomial::linear(const Rational& shift) {
  return RationalPolynomial({shift, Rational(1)});
}

RationalPolynomial RationalPolynomial::monomial(std::size_t degree, const Rational& c) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return RationalPolynomial(std::move(v));
}

void RationalPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

const Rational& RationalPolynomial::leading() const {
  if (coeffs_.empty()) throw InvalidParameters("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rational RationalPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::pow(unsigned exponent) const {
  RationalPolynomial result = constant(1);
  RationalPolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

RationalPolynomial RationalPolynomial::monic() const {
  if (is_zero()) return *this;
  RationalPolynomial r = *this;
  const Rational lc = leading();
  for (auto& c : r.coeffs_) c /= lc;
  return r;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  normalize();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  normalize();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  normalize();
  return *this;
}

RationalPolynomial RationalPolynomial::operator-() const {
  RationalPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string RationalPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) {
      out << mag.get_str();
      if (k > 0) out << "*";
    }
    if (k >= 1) out << "x";
    if (k >= 2) out << "^" << k;
  }
  return out.str();
}

std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                         const RationalPolynomial& b) {
  if (b.is_zero()) throw InvalidParameters("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {RationalPolynomial(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational& lc = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Rational q = rem[static_cast<std::size_t>(k)] / lc;
    quot[static_cast<std::size_t>(k - db)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= q * b.coefficients()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial x = a;
  RationalPolynomial y = b;
  while (!y.is_zero()) {
    RationalPolynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

RationalPolynomial squarefree_part(const RationalPolynomial& p) {
  if (p.degree() <= 0) return p.monic();
  const RationalPolynomial g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

RationalPolynomial gegenbauer(unsigned n, unsigned k) {
  if (n < 2) throw InvalidParameters("gegenbauer: dimension must be at least 2");
  RationalPolynomial prev = RationalPolynomial::constant(1);
  if (k == 0) return prev;
  RationalPolynomial cur = RationalPolynomial::monomial(1);
  const RationalPolynomial x = RationalPolynomial::monomial(1);
  // (j+n-2) G_{j+1} = (2j+n-2) x G_j - j G_{j-1}
  for (unsigned j = 1; j < k; ++j) {
    const Rational a = make_rational(2 * j + n - 2, j + n - 2);
    const Rational b = make_rational(j, j + n - 2);
    RationalPolynomial next = x * cur * a - prev * b;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<Rational> gegenbauer_expand(const RationalPolynomial& p, unsigned n) {
  if (p.is_zero()) return {};
  const auto d = static_cast<unsigned>(p.degree());
  std::vector<RationalPolynomial> basis;
  basis.reserve(d + 1);
  for (unsigned k = 0; k <= d; ++k) basis.push_back(gegenbauer(n, k));
  std::vector<Rational> f(d + 1);
  RationalPolynomial rest = p;
  for (int k = static_cast<int>(d); k >= 0; --k) {
    const auto uk = static_cast<std::size_t>(k);
    const Rational c = rest.coefficient(uk) / basis[uk].leading();
    f[uk] = c;
    if (c != 0) rest -= basis[uk] * c;
  }
  return f;
}

namespace {

/** C(q(x), j) = q(q-1)...(q-j+1)/j! as a polynomial. */
RationalPolynomial binomial_poly(const RationalPolynomial& q, unsigned j) {
  RationalPolynomial r = RationalPolynomial::constant(1);
  for (unsigned i = 0; i < j; ++i) {
    r *= q - RationalPolynomial::constant(i);
    r *= make_rational(1, i + 1);
  }
  return r;
}

}  // namespace

RationalPolynomial krawtchouk(unsigned n, unsigned k) {
  if (k > n) throw InvalidParameters("krawtchouk: degree exceeds length");
  const RationalPolynomial x = RationalPolynomial::monomial(1);
  const RationalPolynomial nx = RationalPolynomial::constant(n) - x;
  RationalPolynomial sum;
  for (unsigned j = 0; j <= k; ++j) {
    RationalPolynomial term = binomial_poly(x, j) * binomial_poly(nx, k - j);
    if (j % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p) {
  std::vector<RationalPolynomial> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  RationalPolynomial d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d);
  while (true) {
    RationalPolynomial r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

namespace {

int sign(const Rational& v) { return sgn(v); }

std::size_t sign_variations(const std::vector<RationalPolynomial>& seq, const Rational& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& q : seq) {
    const int s = sign(q(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::size_t count_roots(const std::vector<RationalPolynomial>& sturm, const Rational& lo,
                        const Rational& hi) {
  if (sturm.empty()) throw InvalidParameters("count_roots: zero polynomial");
  const std::size_t a = sign_variations(sturm, lo);
  const std::size_t b = sign_variations(sturm, hi);
  return a >= b ? a - b : 0;
}

namespace {

/**
 * Bisects an inexact isolating interval of the squarefree g while `keep_going`
 * holds. If a bisection point is a root the interval collapses to it.
 */
template <typename Pred>
void refine(const RationalPolynomial& g, const std::vector<RationalPolynomial>& sturm, RootInterval& iv,
            Pred keep_going) {
  while (!iv.exact() && keep_going(iv)) {
    const Rational mid = (iv.lower + iv.upper) / 2;
    if (g(mid) == 0) {
      iv = {mid, mid};
      return;
    }
    if (count_roots(sturm, iv.lower, mid) == 1) {
      iv.upper = mid;
    } else {
      iv.lower = mid;
    }
  }
}

}  // namespace

std::vector<RootInterval> isolate_roots(const RationalPolynomial& p, const Rational& lo,
                                        const Rational& hi) {
  if (p.is_zero()) throw InvalidParameters("isolate_roots: zero polynomial");
  std::vector<RootInterval> out;
  if (lo >= hi || p.degree() == 0) return out;
  // Work with a squarefree polynomial whose roots avoid both endpoints.
  RationalPolynomial g = squarefree_part(p);
  if (g(lo) == 0) g = divmod(g, RationalPolynomial::linear(-lo)).first;
  if (g(hi) == 0) g = divmod(g, RationalPolynomial::linear(-hi)).first;

  // A bisection point that lands on a root is recorded exactly, divided out,
  // and the isolation restarts on the deflated polynomial.
  std::vector<Rational> exact;
  bool restart = true;
  while (restart) {
    restart = false;
    out.clear();
    if (g.degree() <= 0) break;
    const auto sturm = sturm_sequence(g);
    struct Pending {
      Rational a, b;
      std::size_t count;
    };
    std::vector<Pending> stack{{lo, hi, count_roots(sturm, lo, hi)}};
    while (!stack.empty()) {
      Pending cur = stack.back();
      stack.pop_back();
      if (cur.count == 0) continue;
      if (cur.count == 1) {
        out.push_back({cur.a, cur.b});
        continue;
      }
      const Rational mid = (cur.a + cur.b) / 2;
      if (g(mid) == 0) {
        exact.push_back(mid);
        g = divmod(g, RationalPolynomial::linear(-mid)).first;
        restart = true;
        break;
      }
      stack.push_back({cur.a, mid, count_roots(sturm, cur.a, mid)});
      stack.push_back({mid, cur.b, count_roots(sturm, mid, cur.b)});
    }
  }

  // Shrink every inexact interval away from lo, hi and all exact roots so that
  // no endpoint is a root of p.
  if (g.degree() > 0) {
    const auto sturm = sturm_sequence(g);
    for (auto& iv : out) {
      refine(g, sturm, iv, [&](const RootInterval& x) { return x.lower <= lo || x.upper >= hi; });
      for (const auto& r : exact) {
        refine(g, sturm, iv, [&](const RootInterval& x) { return x.lower <= r && r <= x.upper; });
      }
    }
  }
  for (const auto& r : exact) out.push_back({r, r});
  std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.lower < y.lower; });
  return out;
}

bool nonpositive_on_interval(const RationalPolynomial& p, const Rational& lo, const Rational& hi,
                             Rational* witness) {
  if (lo > hi) throw InvalidParameters("nonpositive_on_interval: lo > hi");
  auto fail = [&](const Rational& at) {
    if (witness) *witness = at;
    return false;
  };
  if (p.is_zero()) return true;
  if (p(lo) > 0) return fail(lo);
  if (p(hi) > 0) return fail(hi);
  if (lo == hi) return true;

  // p has constant sign on each gap between consecutive roots; sample one
  // point strictly inside every gap.
  Rational previous = lo;
  for (const auto& iv : isolate_roots(p, lo, hi)) {
    const Rational sample = (previous + iv.lower) / 2;
    if (p(sample) > 0) return fail(sample);
    previous = iv.upper;
  }
  const Rational sample = (previous + hi) / 2;
  if (p(sample) > 0) return fail(sample);
  return true;
}

std::vector<Rational> rational_roots_in(const RationalPolynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw InvalidParameters("rational_roots_in: zero polynomial");
  std::vector<Rational> out;
  if (lo > hi) return out;
  if (p(lo) == 0) out.push_back(lo);
  if (lo != hi && p(hi) == 0) out.push_back(hi);

  // Scale to integer coefficients; a rational root r then has lc*r integral.
  RationalPolynomial g = squarefree_part(p);
  BigInt den_lcm = 1;
  for (const auto& c : g.coefficients()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  g *= Rational(den_lcm);
  const BigInt lc = abs(g.leading().get_num());
  const auto sturm = sturm_sequence(g);

  for (auto iv : isolate_roots(p, lo, hi)) {
    if (iv.exact()) {
      out.push_back(iv.lower);
      continue;
    }
    while ((iv.upper - iv.lower) * Rational(lc) >= 1) {
      const Rational mid = (iv.lower + iv.upper) / 2;
      if (g(mid) == 0) {
        iv = {mid, mid};
        break;
      }
      if (count_roots(sturm, iv.lower, mid) == 1) {
        iv.upper = mid;
      } else {
        iv.lower = mid;
      }
    }
    if (iv.exact()) {
      out.push_back(iv.lower);
      continue;
    }
    // At most one integer m in (lc*lower, lc*upper); test m/lc.
    const BigInt m = leechcert::floor(iv.lower * Rational(lc)) + 1;
    const Rational candidate = make_rational(m, lc);
    if (candidate > iv.lower && candidate < iv.upper && g(candidate) == 0) out.push_back(candidate);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace leechcert
