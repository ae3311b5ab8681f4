#include "oracles.hpp"

#include <algorithm>

namespace oracle {

using leechcert::make_rational;

Rational sphere_coordinate_moment(unsigned n, unsigned m) {
  if (m % 2 != 0) return 0;
  // E[x^{2k}] = prod_{j=1..k} (2j - 1) / (n + 2j - 2)
  Rational r = 1;
  for (unsigned j = 1; j <= m / 2; ++j) r *= make_rational(2 * j - 1, n + 2 * j - 2);
  return r;
}

Rational weighted_inner(const RationalPolynomial& p, const RationalPolynomial& q, unsigned n) {
  Rational s = 0;
  const auto& a = p.coefficients();
  const auto& b = q.coefficients();
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * b[j] * sphere_coordinate_moment(n, static_cast<unsigned>(i + j));
  }
  return s;
}

std::vector<RationalPolynomial> gegenbauer_by_gram_schmidt(unsigned n, unsigned k_max) {
  std::vector<RationalPolynomial> basis;
  for (unsigned k = 0; k <= k_max; ++k) {
    RationalPolynomial p = RationalPolynomial::monomial(k);
    for (const auto& q : basis) {
      const Rational c = weighted_inner(p, q, n) / weighted_inner(q, q, n);
      p -= q * c;
    }
    basis.push_back(p);
  }
  for (auto& p : basis) p *= Rational(1) / p(Rational(1));
  return basis;
}

BigInt binom(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::vector<BigInt> row{1};
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<BigInt> next(i + 1, 1);
    for (unsigned j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[k];
}

std::int64_t krawtchouk_by_subsets(unsigned n, unsigned k, unsigned x) {
  std::int64_t s = 0;
  const std::uint64_t a = (x == 0) ? 0 : ((std::uint64_t{1} << x) - 1);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (static_cast<unsigned>(__builtin_popcountll(m)) != k) continue;
    s += (__builtin_popcountll(m & a) % 2 == 0) ? 1 : -1;
  }
  return s;
}

std::vector<std::uint64_t> span_by_enumeration(const std::vector<std::uint64_t>& rows) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rows.size()); ++mask) {
    std::uint64_t w = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if ((mask >> i) & 1U) w ^= rows[i];
    }
    out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t rank_by_elimination(std::vector<std::uint64_t> rows) {
  std::size_t rank = 0;
  for (int bit = 63; bit >= 0; --bit) {
    const std::uint64_t mask = std::uint64_t{1} << bit;
    auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                           [&](std::uint64_t r) { return (r & mask) != 0; });
    if (it == rows.end()) continue;
    std::swap(*it, rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != rank && (rows[i] & mask)) rows[i] ^= rows[rank];
    }
    ++rank;
  }
  return rank;
}

bool leech_member(const leechcert::ScaledVector& v, const std::set<std::uint64_t>& golay) {
  const int m = ((v.coords[0] % 2) + 2) % 2;
  int sum = 0;
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < 24; ++i) {
    const int x = v.coords[i];
    if (((x % 2) + 2) % 2 != m) return false;
    sum += x;
    const int r = ((x % 4) + 4) % 4;
    if ((m == 0 && r == 2) || (m == 1 && r == 1)) word |= std::uint64_t{1} << i;
  }
  if ((((sum - 4 * m) % 8) + 8) % 8 != 0) return false;
  return golay.count(word) == 1;
}

Rational projected_inner_explicit(const leechcert::DerivedCode& code, const leechcert::ScaledVector& x,
                                  const leechcert::ScaledVector& y) {
  // Orthogonal projection onto the complement of the anchors, by exact Gram-Schmidt on the anchors.
  const auto& anchors = code.anchors();
  std::vector<std::vector<Rational>> ortho;
  auto to_q = [](const leechcert::ScaledVector& v) {
    std::vector<Rational> q(24);
    for (std::size_t i = 0; i < 24; ++i) q[i] = v.coords[i];
    return q;
  };
  auto dot = [](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  };
  auto project = [&](std::vector<Rational> v) {
    for (const auto& e : ortho) {
      const Rational c = dot(v, e) / dot(e, e);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * e[i];
    }
    return v;
  };
  for (const auto& a : anchors) ortho.push_back(project(to_q(a)));
  const auto px = project(to_q(x));
  const auto py = project(to_q(y));
  return dot(px, py) / dot(px, px);
}

leechcert::Spectrum spectrum_by_pairs(const leechcert::DerivedCode& code) {
  leechcert::Spectrum s;
  const auto& m = code.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      // Projected inner products depend only on the raw dot, so cache by raw value.
      ++s[code.project(leechcert::raw_dot(m[i], m[j]))];
    }
  }
  return s;
}

std::uint64_t intersection_by_count(const leechcert::DerivedCode& code, const leechcert::ScaledVector& x,
                                    const leechcert::ScaledVector& y, const Rational& alpha, const Rational& beta) {
  std::uint64_t c = 0;
  for (const auto& u : code.members()) {
    if (projected_inner_explicit(code, x, u) == alpha && projected_inner_explicit(code, y, u) == beta) ++c;
  }
  return c;
}

std::optional<Rational> two_variable_lp_by_vertices(const leechcert::LinearProgram& lp) {
  using leechcert::Relation;
  // Lines a x + b y = c: every constraint plus the two axes.
  struct Line {
    Rational a, b, c;
  };
  std::vector<Line> lines{{1, 0, 0}, {0, 1, 0}};
  for (const auto& row : lp.constraints) lines.push_back({row.coefficients[0], row.coefficients[1], row.rhs});
  auto feasible = [&](const Rational& x, const Rational& y) {
    if (x < 0 || y < 0) return false;
    for (const auto& row : lp.constraints) {
      const Rational v = row.coefficients[0] * x + row.coefficients[1] * y;
      if (row.relation == Relation::kLessEqual && v > row.rhs) return false;
      if (row.relation == Relation::kGreaterEqual && v < row.rhs) return false;
      if (row.relation == Relation::kEqual && v != row.rhs) return false;
    }
    return true;
  };
  std::optional<Rational> best;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const Rational det = lines[i].a * lines[j].b - lines[i].b * lines[j].a;
      if (det == 0) continue;
      const Rational x = (lines[i].c * lines[j].b - lines[i].b * lines[j].c) / det;
      const Rational y = (lines[i].a * lines[j].c - lines[i].c * lines[j].a) / det;
      if (!feasible(x, y)) continue;
      const Rational v = lp.objective[0] * x + lp.objective[1] * y;
      if (!best || (lp.maximize ? v > *best : v < *best)) best = v;
    }
  }
  return best;
}

std::int64_t Gen::integer(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Rational Gen::rational(std::int64_t max_num, std::int64_t max_den) {
  return make_rational(integer(-max_num, max_num), integer(1, max_den));
}

RationalPolynomial Gen::polynomial(unsigned degree, std::int64_t max_num, std::int64_t max_den) {
  std::vector<Rational> c;
  for (unsigned i = 0; i <= degree; ++i) c.push_back(rational(max_num, max_den));
  if (c.back() == 0) c.back() = 1;
  return RationalPolynomial(c);
}

leechcert::LinearProgram Gen::linear_program(unsigned vars, unsigned rows, bool boxed) {
  leechcert::LinearProgram lp;
  lp.maximize = integer(0, 1) == 1;
  for (unsigned j = 0; j < vars; ++j) lp.objective.push_back(rational(6, 3));
  for (unsigned i = 0; i < rows; ++i) {
    leechcert::LinearConstraint c;
    for (unsigned j = 0; j < vars; ++j) c.coefficients.push_back(rational(5, 3));
    const auto kind = integer(0, 5);
    c.relation = kind < 4 ? leechcert::Relation::kLessEqual
                          : (kind == 4 ? leechcert::Relation::kGreaterEqual : leechcert::Relation::kEqual);
    c.rhs = rational(10, 2);
    lp.constraints.push_back(c);
  }
  if (boxed) {
    leechcert::LinearConstraint box;
    box.coefficients.assign(vars, Rational(1));
    box.relation = leechcert::Relation::kLessEqual;
    box.rhs = integer(1, 20);
    lp.constraints.push_back(box);
  }
  return lp;
}

}  // namespace oracle
