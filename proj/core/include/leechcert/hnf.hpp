#pragma once

#include "leechcert/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace leechcert {

using IntVector = std::vector<std::int64_t>;

/**
 * Row-style Hermite normal form of an integer lattice.
 *
 * `basis` is upper triangular in echelon form: each row has a positive pivot,
 * entries above a pivot are reduced into [0, pivot). Rank deficiency is a
 * reported state, not an error.
 */
struct HermiteForm {
  std::vector<IntVector> basis;
  std::vector<std::size_t> pivots;
  std::size_t dimension = 0;
  bool full_rank = false;
  /** |det| of the basis; present only at full rank. */
  std::optional<BigInt> determinant;
  /** Index in the ambient lattice; present when an ambient lattice was supplied, both are full rank and the input is contained in it. */
  std::optional<BigInt> index;
  /** False when some generator lies outside the supplied ambient lattice. */
  bool contained_in_ambient = true;
};

/**
 * Hermite normal form of the lattice generated by `generators`.
 * Throws DimensionMismatch when generators differ in length and
 * std::overflow_error if 64-bit intermediates would overflow.
 */
HermiteForm hermite_normal_form(std::span<const IntVector> generators);

/** As above, also computing the index of the generated lattice inside `ambient`. */
HermiteForm hermite_normal_form(std::span<const IntVector> generators, const HermiteForm& ambient);

/** Integer membership test against a Hermite basis. */
bool lattice_contains(const HermiteForm& form, const IntVector& v);

}  // namespace leechcert
