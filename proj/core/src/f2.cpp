#include "leechcert/f2.hpp"

#include "leechcert/errors.hpp"

#include <algorithm>

namespace leechcert {

namespace {

F2Word width_mask(unsigned width) { return width >= 64 ? ~F2Word{0} : ((F2Word{1} << width) - 1); }

}  // namespace

F2Matrix::F2Matrix(unsigned width, std::vector<F2Word> rows) : width_(width), rows_(std::move(rows)) {
  if (width == 0 || width > 64) throw InvalidParameters("F2Matrix width must be in 1..64");
  for (F2Word r : rows_) {
    if (r & ~width_mask(width)) throw DimensionMismatch("F2Matrix row wider than declared width");
  }
}

F2Prefix parse_prefix(const std::string& text) {
  if (text.size() > 64) throw ParseError("prefix longer than 64 bits");
  F2Prefix p;
  p.length = static_cast<unsigned>(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      p.bits |= F2Word{1} << i;
    } else if (text[i] != '0') {
      throw ParseError("prefix must be a 0/1 string");
    }
  }
  return p;
}

namespace {

struct PivotRow {
  F2Word pivot;  // single bit
  F2Word row;
};

/** Fully reduced echelon form: each pivot bit occurs only in its own row. */
std::vector<PivotRow> reduce(std::span<const F2Word> rows) {
  std::vector<PivotRow> basis;
  for (F2Word r : rows) {
    for (const auto& b : basis) {
      if (r & b.pivot) r ^= b.row;
    }
    if (r == 0) continue;
    const F2Word pivot = r & (~r + 1);
    for (auto& b : basis) {
      if (b.row & pivot) b.row ^= r;
    }
    basis.push_back({pivot, r});
  }
  return basis;
}

}  // namespace

std::vector<F2Word> f2_basis(std::span<const F2Word> rows) {
  std::vector<F2Word> out;
  for (const auto& b : reduce(rows)) out.push_back(b.row);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t f2_rank(const F2Matrix& m) { return f2_basis(m.rows()).size(); }

bool f2_in_span(std::span<const F2Word> rows, F2Word word) {
  for (const auto& b : reduce(rows)) {
    if (word & b.pivot) word ^= b.row;
  }
  return word == 0;
}

std::uint64_t f2_span_count_with_prefix(std::span<const F2Word> rows, F2Prefix prefix) {
  const F2Word mask = width_mask(prefix.length);
  if (prefix.bits & ~mask) throw InvalidParameters("prefix bits exceed prefix length");
  std::vector<F2Word> projected;
  projected.reserve(rows.size());
  for (F2Word r : rows) projected.push_back(r & mask);
  if (!f2_in_span(projected, prefix.bits)) return 0;
  const std::size_t full = f2_basis(rows).size();
  const std::size_t image = f2_basis(projected).size();
  return std::uint64_t{1} << (full - image);
}

std::vector<F2Word> f2_enumerate_span(std::span<const F2Word> rows) {
  const auto basis = f2_basis(rows);
  if (basis.size() > 30) throw InvalidParameters("span too large to enumerate");
  std::vector<F2Word> out(std::size_t{1} << basis.size());
  // Gray-code walk over all combinations.
  F2Word cur = 0;
  out[0] = 0;
  for (std::size_t i = 1; i < out.size(); ++i) {
    cur ^= basis[static_cast<std::size_t>(__builtin_ctzll(i))];
    out[i] = cur;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_bit_string(F2Word w, unsigned width) {
  std::string s(width, '0');
  for (unsigned i = 0; i < width; ++i) {
    if ((w >> i) & 1U) s[i] = '1';
  }
  return s;
}

}  // namespace leechcert
