#pragma once

#include "leechcert/frame.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace leechcert {

enum class CaseLabel { kI, kII, kIII, kIV, kV };
std::string to_string(CaseLabel c);

/** Members sorted into cases, in frame coordinates. */
struct CaseSplit {
  Pipeline pipeline = Pipeline::k891;
  std::map<CaseLabel, std::vector<FrameCoords>> cases;
  /** First coordinate not fixed by the anchors: 3 (891) or 2 (4600), 0-based. */
  std::size_t tail_start = 3;
  /** Case III supports on the tail coordinates; bit i is tail coordinate i. */
  std::vector<F2Word> d_code;
  /** Case IV c-parts: bit i set where tail coordinate i is +1. */
  std::vector<F2Word> e_code;
  unsigned tail_length() const { return static_cast<unsigned>(kLeechDim - tail_start); }
  std::size_t count(CaseLabel c) const;
};

/**
 * Labels every member. Each coordinate vector must satisfy sum w_i^2 = 32,
 * (w_i +- w_j)/2 in {0, +-1, +-2, +-4}, (w_1 + w_2)/2 = 2 and, for 891,
 * (w_1 + w_3)/2 = 2, and then match exactly one template. Throws
 * UnclassifiableVector naming the offending coordinates.
 */
CaseSplit classify_cases(std::span<const ScaledVector> members, const D24Frame& frame, Pipeline pipeline);

struct ParityResult {
  std::size_t vectors = 0;
  std::size_t codewords = 0;
  /** Sign patterns seen per Case III support (min and max over supports). */
  std::size_t min_patterns = 0;
  std::size_t max_patterns = 0;
};

/**
 * Counts minus signs r on each Case III vector's tail; r must be even (891)
 * or odd (4600), and <W_0, V> must equal 4r/8 (891) or (4r - 4)/8 (4600).
 * Throws ParityViolation with the witness.
 */
ParityResult parity_check(const CaseSplit& split, const FrameCoords& w0);

struct GenerationResult {
  /** GF(2) rank of the prefixed rows 111d (891) or 11d (4600). */
  std::size_t rank = 0;
  /** Span words with zero prefix. */
  std::uint64_t span_count = 0;
  std::size_t case_iv_count = 0;
  /** Every Case IV c-part, prefixed by zeros, lies in the span. */
  bool case_iv_in_span = false;
  /** The zero-prefix span words are exactly the Case IV c-parts. */
  bool sets_equal = false;
  bool weights_divisible_by_4 = false;
  /** Least raw norm (8 |W - W'|^2) over pairs of distinct Case IV members; -1 if fewer than two. */
  std::int64_t min_difference_raw_norm = 0;
  /** 4600 only: Case V is V_0 minus Case IV, as sets. */
  std::optional<bool> case_v_is_v0_minus_case_iv;
};

/** Span argument for the Case IV (and Case V) members. Throws SpanMismatch with a witness word. */
GenerationResult generation_check(const CaseSplit& split);

}  // namespace leechcert
