#pragma once

#include "leechcert/cases.hpp"
#include "leechcert/codes.hpp"
#include "leechcert/frame.hpp"
#include "leechcert/hnf.hpp"
#include "leechcert/report.hpp"

#include <optional>
#include <span>
#include <vector>

namespace leechcert {

/** Anchors and members of a pipeline's concrete model. */
struct ChainModel {
  std::vector<ScaledVector> anchors;  // V0 (, V1)
  std::vector<ScaledVector> members;
};

/**
 * Derives the model from the Leech minimal vectors: V0 is the first minimal
 * vector, the 4600 members are its kissing configuration, V1 is the first of
 * those and the 891 members are the kissing configuration of V1 inside it.
 */
ChainModel build_chain_model(Pipeline pipeline, std::span<const ScaledVector> leech);

/** Level parameters of the pipeline's chain: {1/2, 1/3} or {1/2}. */
std::vector<Rational> pipeline_levels(Pipeline pipeline);

struct IndexResult {
  std::optional<BigInt> index;
  bool contained = false;
  /** |det| of the Hermite basis of the lattice spanned by the minimal vectors. */
  BigInt leech_determinant;
  /** 4600: a minimal vector with odd inner product with V0. */
  std::optional<ScaledVector> odd_witness;
  bool witness_outside_L = false;
  /** Every generator of L has even inner product with V0. */
  bool generators_even_with_v0 = false;
};

/** Hermite form of the lattice spanned by the minimal vectors. */
HermiteForm leech_hermite_form(std::span<const ScaledVector> leech);

/** Index of the lattice spanned by anchors + members inside the Leech lattice. */
IndexResult index_in_leech(Pipeline pipeline, std::span<const ScaledVector> anchors,
                           std::span<const ScaledVector> members, std::span<const ScaledVector> leech,
                           const HermiteForm& leech_form);

struct UniquenessOptions {
  /** Selects G_1 (and the scan order) in the frame search. */
  std::size_t seed = 0;
  unsigned threads = 0;
  /** Precomputed minimal vectors; built on demand when null. */
  const std::vector<ScaledVector>* leech = nullptr;
  /** Adds the long-running 196560-point design-strength check. */
  bool extended = false;
};

/** Table of intersection numbers expected for the 891-point code: (gamma, alpha, beta, value). */
struct IntersectionEntry {
  Rational gamma, alpha, beta;
  std::uint64_t value;
};
std::vector<IntersectionEntry> expected_intersection_numbers_891();

/** Builds the model and certifies every step; never throws on a mathematical failure. */
CertificateReport run_uniqueness(Pipeline pipeline, const UniquenessOptions& options = {});

/** Certifies a given model (anchors, members); used to check the harness on corrupted input. */
CertificateReport run_uniqueness_on(Pipeline pipeline, const ChainModel& model, const UniquenessOptions& options = {});

}  // namespace leechcert
