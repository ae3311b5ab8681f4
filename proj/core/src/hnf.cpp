#include "leechcert/hnf.hpp"

#include "leechcert/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace leechcert {

namespace {

using Wide = __int128;

std::int64_t narrow(Wide v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("hermite_normal_form: 64-bit overflow");
  return static_cast<std::int64_t>(v);
}

/** a*x + b*y, checked. */
void combine(IntVector& out, std::int64_t a, const IntVector& x, std::int64_t b, const IntVector& y) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = narrow(Wide(a) * x[i] + Wide(b) * y[i]);
}

struct ExtGcd {
  std::int64_t g, s, t;
};

ExtGcd ext_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

class Builder {
 public:
  explicit Builder(std::size_t dim) : dim_(dim), row_of_(dim, npos) {}

  void insert(IntVector v) {
    if (v.size() != dim_) throw DimensionMismatch("generator length differs from lattice dimension");
    bool changed = false;
    for (std::size_t c = 0; c < dim_; ++c) {
      if (v[c] == 0) continue;
      if (row_of_[c] == npos) {
        if (v[c] < 0) {
          for (auto& x : v) x = -x;
        }
        row_of_[c] = rows_.size();
        rows_.push_back(std::move(v));
        reduce_all();
        return;
      }
      IntVector& r = rows_[row_of_[c]];
      const std::int64_t rc = r[c];
      const std::int64_t vc = v[c];
      if (vc % rc == 0) {
        const std::int64_t q = vc / rc;
        combine(v, 1, v, -q, r);
        continue;
      }
      const ExtGcd e = ext_gcd(rc, vc);
      IntVector nr(dim_), nv(dim_);
      combine(nr, e.s, r, e.t, v);
      combine(nv, rc / e.g, v, -(vc / e.g), r);
      r = std::move(nr);
      v = std::move(nv);
      changed = true;
    }
    if (changed) reduce_all();
  }

  HermiteForm finish() {
    HermiteForm f;
    f.dimension = dim_;
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < dim_; ++c) {
      if (row_of_[c] != npos) cols.push_back(c);
    }
    for (std::size_t c : cols) {
      f.basis.push_back(rows_[row_of_[c]]);
      f.pivots.push_back(c);
    }
    f.full_rank = cols.size() == dim_;
    if (f.full_rank) {
      BigInt det = 1;
      for (std::size_t i = 0; i < f.basis.size(); ++i) det *= BigInt(static_cast<long>(f.basis[i][f.pivots[i]]));
      f.determinant = det;
    }
    return f;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  /** Brings every entry above a pivot into [0, pivot). */
  void reduce_all() {
    for (std::size_t c = 0; c < dim_; ++c) {
      if (row_of_[c] == npos) continue;
      const IntVector& p = rows_[row_of_[c]];
      for (std::size_t c2 = 0; c2 < c; ++c2) {
        if (row_of_[c2] == npos) continue;
        IntVector& above = rows_[row_of_[c2]];
        const std::int64_t q = floor_div(above[c], p[c]);
        if (q != 0) combine(above, 1, above, -q, p);
      }
    }
  }

  std::size_t dim_;
  std::vector<std::size_t> row_of_;
  std::vector<IntVector> rows_;
};

}  // namespace

HermiteForm hermite_normal_form(std::span<const IntVector> generators) {
  if (generators.empty()) return {};
  Builder b(generators.front().size());
  for (const auto& g : generators) b.insert(g);
  return b.finish();
}

bool lattice_contains(const HermiteForm& form, const IntVector& v) {
  if (v.size() != form.dimension) throw DimensionMismatch("vector length differs from lattice dimension");
  IntVector rest = v;
  std::size_t next = 0;
  for (std::size_t c = 0; c < form.dimension; ++c) {
    if (next < form.pivots.size() && form.pivots[next] == c) {
      const IntVector& row = form.basis[next];
      if (rest[c] % row[c] != 0) return false;
      const std::int64_t q = rest[c] / row[c];
      if (q != 0) combine(rest, 1, rest, -q, row);
      ++next;
    } else if (rest[c] != 0) {
      return false;
    }
  }
  return true;
}

HermiteForm hermite_normal_form(std::span<const IntVector> generators, const HermiteForm& ambient) {
  HermiteForm f = hermite_normal_form(generators);
  for (const auto& row : f.basis) {
    if (!lattice_contains(ambient, row)) {
      f.contained_in_ambient = false;
      break;
    }
  }
  if (f.full_rank && ambient.full_rank && f.contained_in_ambient) {
    f.index = *f.determinant / *ambient.determinant;
  }
  return f;
}

}  // namespace leechcert
