#pragma once

#include "leechcert/codes.hpp"
#include "leechcert/leech.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace leechcert {

/** The two pipelines: 891 members with anchors (V0, V1), or 4600 members with anchor V0. */
enum class Pipeline { k891, k4600 };
std::string to_string(Pipeline p);

/** Frame coordinates (w_1, ..., w_24) of a vector, so that W = sum w_i E_i / sqrt(8). */
using FrameCoords = std::array<int, kLeechDim>;

/** Integer vector in the scaled ambient coordinates with entries wider than int8. */
using WideVector = std::array<std::int32_t, kLeechDim>;

std::int64_t raw_dot(const ScaledVector& v, const WideVector& w);
std::int64_t raw_dot(const WideVector& v, const WideVector& w);
WideVector widen(const ScaledVector& v);

/**
 * A copy of sqrt(2) D_24 inside the lattice. G holds the Dynkin generators
 * G_1..G_24 (<G_1,G_2> = 0, <G_1,G_3> = -2, <G_i,G_{i+1}> = -2 for i >= 2),
 * and E2 holds 2 sqrt(2) E_i, which has integer scaled coordinates even when
 * sqrt(2) E_i does not.
 */
struct D24Frame {
  std::vector<ScaledVector> G;
  std::vector<WideVector> E2;
  /** Candidate-pool size at each extension step n = 3..23. */
  std::vector<std::size_t> pool_sizes;
  /** Number of members orthogonal to both G_1 and G_2. */
  std::size_t orthogonal_pair_members = 0;
  /** Case IV representative after normalization. */
  std::optional<ScaledVector> w0;
};

/** Generators of L (anchors first) and the member inner-product translation table. */
struct AssembledLattice {
  std::vector<ScaledVector> generators;
  /** Projected member inner product -> ambient inner product. */
  std::map<Rational, Rational> translation;
};

/**
 * Builds the generator list anchors + members and checks that all inner
 * products are integers (NotIntegral) and all norms even (NotEven), naming a
 * witness pair.
 */
AssembledLattice assemble_L(std::span<const ScaledVector> members, std::span<const ScaledVector> anchors);

/** True iff every inner product among generators and their negatives lies in {0, +-1, +-2, +-4}. */
bool minimal_ip_closure_check(std::span<const ScaledVector> members, std::span<const ScaledVector> anchors);

/**
 * Inductive construction of sqrt(2) D_24. G_1 is chosen by `seed`; later
 * choices take the first admissible candidate in an order rotated by the
 * seed. The pool at each step is {members W with <G_1,W> = <G_2,W> = 2},
 * the anchors, and V_0 - U for members U orthogonal to G_1 and G_2; the
 * anchors are preferred. Throws ExtensionStuck when every candidate already
 * lies in the current sqrt(2) D_n.
 */
D24Frame find_d24_frame(std::span<const ScaledVector> members, std::span<const ScaledVector> anchors,
                        std::size_t seed = 0);

/** First violated frame invariant (Gram pattern, orthonormality), if any. */
std::optional<std::string> check_frame(const D24Frame& frame);

/** True iff v = sum a_i sqrt(2) E_i (i < n) with integer a_i of even sum. */
bool in_sqrt2_dn(const ScaledVector& v, const D24Frame& frame, std::size_t n);

/** w_i = 2 <W, sqrt(2) E_i>. Throws NonIntegerCoordinate, or when sum w_i^2 != 8 |W|^2. */
FrameCoords coordinates_in_frame(const ScaledVector& w, const D24Frame& frame);

/**
 * Signed permutation of the E-frame taking V_0 to (4,4,0,...) and V_1 (if
 * given) to (4,0,4,0,...), followed by sign changes on the remaining
 * coordinates that bring the first Case IV member to (3,1,1,-1,...,-1)
 * (891) or (3,1,-1,...,-1) (4600). Throws NormalizationImpossible.
 */
D24Frame normalize_frame(const D24Frame& frame, const ScaledVector& v0, const std::optional<ScaledVector>& v1,
                         std::span<const ScaledVector> members, Pipeline pipeline);

}  // namespace leechcert
