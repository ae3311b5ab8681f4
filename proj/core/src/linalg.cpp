#include "leechcert/linalg.hpp"

#include "leechcert/errors.hpp"

#include <utility>

namespace leechcert {

namespace {

using IntMatrix = std::vector<std::vector<BigInt>>;

/** Scales each row of [A | b] by the lcm of its denominators. */
IntMatrix integer_rows(const RationalMatrix& a, const std::vector<Rational>* b) {
  const std::size_t n = a.size();
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    BigInt l = 1;
    for (const auto& v : a[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    if (b) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*b)[i].get_den_mpz_t());
    m[i].reserve(a[i].size() + (b ? 1 : 0));
    for (const auto& v : a[i]) m[i].push_back(v.get_num() * (l / v.get_den()));
    if (b) m[i].push_back((*b)[i].get_num() * (l / (*b)[i].get_den()));
  }
  return m;
}

/**
 * Bareiss elimination on the first n columns. Returns the sign of the row
 * permutation, or 0 if the leading n x n block is singular.
 */
int bareiss(IntMatrix& m, std::size_t n) {
  int sign = 1;
  BigInt prev = 1;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign;
}

void check_square(const RationalMatrix& a) {
  for (const auto& row : a) {
    if (row.size() != a.size()) throw DimensionMismatch("matrix is not square");
  }
}

}  // namespace

std::vector<Rational> solve_linear_system(const RationalMatrix& a, const std::vector<Rational>& b) {
  check_square(a);
  if (b.size() != a.size()) throw DimensionMismatch("right-hand side length differs from matrix size");
  const std::size_t n = a.size();
  IntMatrix m = integer_rows(a, &b);
  if (bareiss(m, n) == 0) throw SingularMatrix("singular system: determinant is zero");
  std::vector<Rational> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rational acc(m[ii][n]);
    for (std::size_t j = ii + 1; j < n; ++j) acc -= Rational(m[ii][j]) * x[j];
    x[ii] = acc / Rational(m[ii][ii]);
  }
  return x;
}

Rational determinant(const RationalMatrix& a) {
  check_square(a);
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Rational scale = 1;
  for (const auto& row : a) {
    BigInt l = 1;
    for (const auto& v : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    scale *= Rational(l);
  }
  IntMatrix m = integer_rows(a, nullptr);
  const int sign = bareiss(m, n);
  if (sign == 0) return 0;
  return Rational(m[n - 1][n - 1]) * sign / scale;
}

std::vector<Rational> multiply(const RationalMatrix& a, const std::vector<Rational>& x) {
  std::vector<Rational> y(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != x.size()) throw DimensionMismatch("matrix-vector shape mismatch");
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  }
  return y;
}

}  // namespace leechcert
