#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace leechcert {

/** GF(2) word packed into 64 bits; bit i is coordinate i. */
using F2Word = std::uint64_t;

inline int weight(F2Word w) { return __builtin_popcountll(w); }
inline int distance(F2Word a, F2Word b) { return weight(a ^ b); }

/** Fixed-width GF(2) matrix with packed rows (width at most 64). */
class F2Matrix {
 public:
  F2Matrix(unsigned width, std::vector<F2Word> rows);

  unsigned width() const { return width_; }
  const std::vector<F2Word>& rows() const { return rows_; }
  std::size_t row_count() const { return rows_.size(); }

 private:
  unsigned width_;
  std::vector<F2Word> rows_;
};

/** Leading coordinates of a word: `bits` holds coordinates 0..length-1. */
struct F2Prefix {
  F2Word bits = 0;
  unsigned length = 0;
};

/** Parses a 0/1 string such as "000" into a prefix (first character is coordinate 0). */
F2Prefix parse_prefix(const std::string& text);

std::size_t f2_rank(const F2Matrix& m);

/** Reduced echelon basis of the row span; rows are independent. */
std::vector<F2Word> f2_basis(std::span<const F2Word> rows);

bool f2_in_span(std::span<const F2Word> rows, F2Word word);

/**
 * Number of words in the GF(2) span of `rows` whose leading coordinates
 * equal `prefix`. Computed from ranks: the count is 0 or
 * 2^(rank(rows) - rank(rows restricted to the prefix coordinates)).
 */
std::uint64_t f2_span_count_with_prefix(std::span<const F2Word> rows, F2Prefix prefix);

/** Every word of the span (2^rank of them). Caller bounds the rank. */
std::vector<F2Word> f2_enumerate_span(std::span<const F2Word> rows);

std::string to_bit_string(F2Word w, unsigned width);

}  // namespace leechcert
