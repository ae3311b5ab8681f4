#pragma once

#include "leechcert/leech.hpp"
#include "leechcert/pairwise.hpp"
#include "leechcert/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace leechcert {

/**
 * Spherical code given by an anchor chain of ambient lattice vectors and a
 * member set. Members share one norm; projected inner products are obtained
 * from the ambient one, s = <x,y>/|x|^2, by s -> (s - t^2)/(1 - t^2) once per
 * derivation level with that level's t.
 */
class DerivedCode {
 public:
  /** Kissing code of the lattice itself: no anchors, dimension 24. */
  static DerivedCode root(std::vector<ScaledVector> members);

  /** Infers level parameters from the data and validates them; throws InvalidParameters. */
  static DerivedCode from_chain(std::vector<ScaledVector> anchors, std::vector<ScaledVector> members);

  /** Trusts the given level parameters; use validate() to check them. */
  DerivedCode(std::vector<ScaledVector> anchors, std::vector<ScaledVector> members,
              std::vector<Rational> level_params);

  const std::vector<ScaledVector>& anchors() const { return anchors_; }
  const std::vector<ScaledVector>& members() const { return members_; }
  const std::vector<Rational>& level_params() const { return level_params_; }
  std::size_t size() const { return members_.size(); }
  unsigned dimension() const { return static_cast<unsigned>(kLeechDim - anchors_.size()); }

  /** Projected inner product for a raw ambient dot product. */
  Rational project(std::int64_t raw_dot) const;
  Rational projected_inner(const ScaledVector& x, const ScaledVector& y) const;

  /** Description of the first violated invariant, if any. */
  std::optional<std::string> validate() const;

 private:
  /** Applies levels [0, levels) to a raw dot. */
  Rational project_levels(std::int64_t raw_dot, std::size_t levels) const;

  std::vector<ScaledVector> anchors_;
  std::vector<ScaledVector> members_;
  std::vector<Rational> level_params_;
  std::int64_t raw_norm_ = 0;
};

/**
 * Kissing configuration of `code` around the member `base`: members whose
 * projected inner product with base equals the largest value attained at
 * base. Throws InvalidParameters if base is not a member and
 * EmptyNeighborhood if no other member exists.
 */
DerivedCode derive_kissing(const DerivedCode& code, const ScaledVector& base);

/** Projected inner products over unordered distinct pairs, with multiplicities. */
using Spectrum = std::map<Rational, std::uint64_t>;
Spectrum spectrum(const DerivedCode& code, unsigned threads = 0);
Spectrum spectrum_from_histogram(const DerivedCode& code, const DotHistogram& raw);

/**
 * S_k = sum over ordered pairs (x, y), x = y included, of G_k(<x, y>)
 * for k = 1..k_max, computed from the pair spectrum.
 */
std::vector<Rational> gegenbauer_pair_sums(const Spectrum& spec, std::uint64_t size, unsigned dimension,
                                           unsigned k_max);

/** Largest t <= k_max with S_1 = ... = S_t = 0. */
unsigned design_strength(const DerivedCode& code, unsigned k_max, unsigned threads = 0);
unsigned design_strength(const Spectrum& spec, std::uint64_t size, unsigned dimension, unsigned k_max);

/**
 * Integral of <z, u>^i over the unit sphere in R^n (normalized measure) for
 * |u|^2 = r_sq. Throws OddDimensionUnsupported for odd n.
 */
Rational sphere_moment(unsigned n, unsigned i, const Rational& r_sq);

/** N_alpha per inner-product value; may be negative or fractional. */
struct DistributionCounts {
  std::vector<std::pair<Rational, Rational>> counts;  // (alpha, N_alpha) in input order
  Rational total() const;
  Rational at(const Rational& alpha) const;
};

/**
 * Solves sum_alpha N_alpha alpha^i = N * sphere_moment(n, i, r_sq) for
 * i = 0..|alphas|-1. Requires |alphas| <= strength + 1 (InvalidParameters);
 * duplicate alphas raise SingularMatrix.
 */
DistributionCounts solve_distribution(std::uint64_t code_size, unsigned n, const Rational& r_sq,
                                      const std::vector<Rational>& alphas, unsigned strength);

/** Intersection numbers P_gamma(alpha, beta) of an association scheme. */
struct IntersectionTable {
  std::vector<Rational> alphabet;  // descending; alphabet[0] == 1
  /** values[g][a][b] indexed into the alphabet. */
  std::vector<std::vector<std::vector<std::uint64_t>>> values;

  std::uint64_t at(const Rational& gamma, const Rational& alpha, const Rational& beta) const;
  std::size_t index_of(const Rational& value) const;
};

/**
 * Counts, for every ordered pair (i, j) and every (alpha, beta), the members
 * k with <u_i,u_k> = alpha and <u_j,u_k> = beta, and checks the counts depend
 * only on <u_i,u_j>. Throws NotAScheme with both witness pairs otherwise.
 */
IntersectionTable intersection_numbers(const DerivedCode& code, unsigned threads = 0);

/** Members grouped by their individual inner-product histograms. */
struct OrbitSplit {
  std::vector<std::vector<std::size_t>> classes;  // member indices, largest class last
  std::vector<std::size_t> sizes() const;
};
OrbitSplit orbit_split_by_histogram(const DerivedCode& code);

}  // namespace leechcert
