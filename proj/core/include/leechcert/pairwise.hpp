#pragma once

#include "leechcert/leech.hpp"

#include <cstdint>
#include <map>
#include <span>

namespace leechcert {

using DotHistogram = std::map<std::int64_t, std::uint64_t>;

/**
 * Histogram of raw dot products over all unordered pairs i < j.
 *
 * Vectors with small entries go through a vectorized structure-of-arrays
 * kernel that counts the raw values {-32, -24, ..., 32} directly; any pair
 * outside that set triggers an exact scalar rescan, so the result is exact
 * for arbitrary input.
 */
DotHistogram pair_dot_histogram(std::span<const ScaledVector> vectors, unsigned threads = 0);

/**
 * Same result as pair_dot_histogram. When the set is closed under negation
 * only one representative per +-pair is scanned and the rest follows by sign,
 * which quarters the work.
 */
DotHistogram pair_dot_histogram_symmetric(std::span<const ScaledVector> vectors, unsigned threads = 0);

/** Histogram of raw dot products over the product set A x B. */
DotHistogram cross_dot_histogram(std::span<const ScaledVector> a, std::span<const ScaledVector> b,
                                 unsigned threads = 0);

}  // namespace leechcert
