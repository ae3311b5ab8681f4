#pragma once

#include "leechcert/f2.hpp"
#include "leechcert/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace leechcert {

inline constexpr std::size_t kLeechDim = 24;
/** Every ScaledVector denotes coords / sqrt(kScaleSquared). */
inline constexpr int kScaleSquared = 8;

/**
 * Integer vector in R^24 read with the global scale 1/sqrt(8).
 * Leech minimal vectors have entries in [-4, 4] and raw norm 32.
 */
struct ScaledVector {
  std::array<std::int8_t, kLeechDim> coords{};

  friend auto operator<=>(const ScaledVector&, const ScaledVector&) = default;

  ScaledVector operator-() const;
  friend ScaledVector operator+(const ScaledVector& a, const ScaledVector& b);
  friend ScaledVector operator-(const ScaledVector& a, const ScaledVector& b);
};

/** Raw coordinate dot product sum v_i w_i (eight times the inner product). */
inline std::int64_t raw_dot(const ScaledVector& v, const ScaledVector& w) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < kLeechDim; ++i) s += static_cast<std::int64_t>(v.coords[i]) * w.coords[i];
  return s;
}

/** Exact inner product (sum v_i w_i) / 8. */
Rational inner(const ScaledVector& v, const ScaledVector& w);
/** Inner product of raw integer vectors of the same scale; throws DimensionMismatch. */
Rational inner(std::span<const std::int64_t> v, std::span<const std::int64_t> w);
Rational norm(const ScaledVector& v);

/** Binary code of fixed length with words packed as F2Word. */
class BinaryCode {
 public:
  BinaryCode(unsigned length, std::vector<F2Word> words);

  unsigned length() const { return length_; }
  const std::vector<F2Word>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  bool contains(F2Word w) const;
  /** A_w: number of words of each weight. */
  std::map<int, std::size_t> weight_distribution() const;
  int minimum_distance() const;

 private:
  unsigned length_;
  std::vector<F2Word> words_;  // sorted, unique
};

/** The extended binary Golay code [24, 12, 8]; throws if the weight distribution check fails. */
BinaryCode build_golay();

/** Generator rows used by build_golay (extended cyclic code of length 23). */
std::vector<F2Word> golay_generators();

/** Shape class of a Leech minimal vector in standard coordinates. */
enum class LeechShape { kFourFour, kOctad, kOdd, kOther };
LeechShape classify_shape(const ScaledVector& v);

/**
 * The 196560 minimal vectors (norm 4) of the Leech lattice in standard
 * coordinates, sorted lexicographically.
 */
std::vector<ScaledVector> leech_minimal_vectors();

/** Members of `pool` whose inner product with `anchor` equals `target` exactly. */
std::vector<ScaledVector> neighbors(std::span<const ScaledVector> pool, const ScaledVector& anchor,
                                    const Rational& target);

/** Histogram of inner products <v, anchor> over the pool, keyed by exact value. */
std::map<Rational, std::size_t> inner_product_histogram(std::span<const ScaledVector> pool,
                                                        const ScaledVector& anchor);

/** Result of the all-pairs scan over a negation-closed minimal-vector set. */
struct MinimalPairScan {
  /** Unordered distinct pairs, keyed by exact inner product. */
  std::map<Rational, std::uint64_t> histogram;
  bool negation_closed = false;
  bool all_norm_four = false;
  /** Every pairwise inner product in {0, +-1, +-2, +-4}. */
  bool closure_ok = false;
};

/**
 * Scans all unordered pairs of a negation-closed vector set. Only pairs from
 * one representative per +-pair are computed; the others follow by sign.
 */
MinimalPairScan scan_minimal_pairs(std::span<const ScaledVector> vectors, unsigned threads = 0);

std::vector<std::int64_t> to_int_vector(const ScaledVector& v);

}  // namespace leechcert
