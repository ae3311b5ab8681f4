#pragma once

#include "leechcert/leech.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>

namespace leechcert {

/** Blocks of a t-(v, k, 1) design as weight-k words of length v. */
struct SteinerSystem {
  unsigned t = 0;
  unsigned k = 0;
  unsigned v = 0;
  BinaryCode blocks;
};

struct SteinerCheck {
  bool ok = false;
  /** A t-subset covered 0 or at least 2 times, or a block of the wrong weight. */
  std::optional<F2Word> witness;
  std::size_t witness_cover_count = 0;
  std::string reason;
};

/**
 * True iff every t-subset of the v points lies in exactly one block. Blocks
 * of weight other than k or length other than v fail with that block as the
 * witness.
 */
SteinerCheck verify_steiner(const BinaryCode& blocks, unsigned t, unsigned k, unsigned v);

/** The 21 lines of the projective plane over the field with 4 elements; points ordered by normalized coordinates. */
SteinerSystem build_pg24();

/**
 * S(3,6,22): the 21 lines extended by a new point 21 together with the 56
 * hyperovals meeting a fixed hyperoval in an even number of points.
 * Verified before returning.
 */
SteinerSystem build_s3622();

/** Pairwise Hamming distances over unordered pairs of distinct words. */
std::map<int, std::uint64_t> distance_profile(const BinaryCode& code);

/** Block file: header "steiner t k v count", then one block per line as ascending 0-based point indices. */
void write_steiner(std::ostream& out, const SteinerSystem& s);
SteinerSystem read_steiner(std::istream& in);

}  // namespace leechcert
