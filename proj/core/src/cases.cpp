#include "leechcert/cases.hpp"

#include "leechcert/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

namespace leechcert {

std::string to_string(CaseLabel c) {
  switch (c) {
    case CaseLabel::kI: return "I";
    case CaseLabel::kII: return "II";
    case CaseLabel::kIII: return "III";
    case CaseLabel::kIV: return "IV";
    case CaseLabel::kV: return "V";
  }
  return "?";
}

std::size_t CaseSplit::count(CaseLabel c) const {
  auto it = cases.find(c);
  return it == cases.end() ? 0 : it->second.size();
}

namespace {

std::string describe(const FrameCoords& w) {
  std::ostringstream ss;
  ss << '(';
  for (std::size_t i = 0; i < w.size(); ++i) ss << (i ? "," : "") << w[i];
  ss << ')';
  return ss.str();
}

bool allowed_half(int twice) {
  if (twice % 2 != 0) return false;
  const int h = std::abs(twice / 2);
  return h == 0 || h == 1 || h == 2 || h == 4;
}

/** Number of tail entries with |w_j| == a; all other tail entries must be zero (or, for a == 1, none). */
struct TailShape {
  std::size_t with_abs = 0;
  std::size_t nonzero = 0;
};

TailShape tail_shape(const FrameCoords& w, std::size_t start, int a) {
  TailShape t;
  for (std::size_t j = start; j < kLeechDim; ++j) {
    if (w[j] != 0) ++t.nonzero;
    if (std::abs(w[j]) == a) ++t.with_abs;
  }
  return t;
}

std::optional<CaseLabel> match_891(const FrameCoords& w) {
  const std::size_t s = 3;
  if (w[0] == 4 && w[1] == 0 && w[2] == 0) {
    const auto t = tail_shape(w, s, 4);
    if (t.with_abs == 1 && t.nonzero == 1) return CaseLabel::kI;
  }
  if (w[0] == 0 && w[1] == 4 && w[2] == 4 && tail_shape(w, s, 4).nonzero == 0) return CaseLabel::kII;
  if (w[0] == 2 && w[1] == 2 && w[2] == 2) {
    const auto t = tail_shape(w, s, 2);
    if (t.with_abs == 5 && t.nonzero == 5) return CaseLabel::kIII;
  }
  if (w[0] == 3 && w[1] == 1 && w[2] == 1 && tail_shape(w, s, 1).with_abs == kLeechDim - s) return CaseLabel::kIV;
  return std::nullopt;
}

std::optional<CaseLabel> match_4600(const FrameCoords& w) {
  const std::size_t s = 2;
  if ((w[0] == 4 && w[1] == 0) || (w[0] == 0 && w[1] == 4)) {
    const auto t = tail_shape(w, s, 4);
    if (t.with_abs == 1 && t.nonzero == 1) return w[0] == 4 ? CaseLabel::kI : CaseLabel::kII;
  }
  if (w[0] == 2 && w[1] == 2) {
    const auto t = tail_shape(w, s, 2);
    if (t.with_abs == 6 && t.nonzero == 6) return CaseLabel::kIII;
  }
  if (((w[0] == 3 && w[1] == 1) || (w[0] == 1 && w[1] == 3)) && tail_shape(w, s, 1).with_abs == kLeechDim - s) {
    return w[0] == 3 ? CaseLabel::kIV : CaseLabel::kV;
  }
  return std::nullopt;
}

F2Word tail_support(const FrameCoords& w, std::size_t start) {
  F2Word b = 0;
  for (std::size_t j = start; j < kLeechDim; ++j) {
    if (w[j] != 0) b |= F2Word{1} << (j - start);
  }
  return b;
}

F2Word tail_plus_ones(const FrameCoords& w, std::size_t start) {
  F2Word b = 0;
  for (std::size_t j = start; j < kLeechDim; ++j) {
    if (w[j] == 1) b |= F2Word{1} << (j - start);
  }
  return b;
}

}  // namespace

CaseSplit classify_cases(std::span<const ScaledVector> members, const D24Frame& frame, Pipeline pipeline) {
  CaseSplit split;
  split.pipeline = pipeline;
  split.tail_start = pipeline == Pipeline::k891 ? 3 : 2;
  std::set<F2Word> d, e;
  for (const auto& u : members) {
    const FrameCoords w = coordinates_in_frame(u, frame);
    std::int64_t sum_sq = 0;
    for (int x : w) sum_sq += x * x;
    if (sum_sq != 32) throw UnclassifiableVector(describe(w) + ": squared length is not 32");
    for (std::size_t i = 0; i < kLeechDim; ++i) {
      for (std::size_t j = i + 1; j < kLeechDim; ++j) {
        if (!allowed_half(w[i] + w[j]) || !allowed_half(w[i] - w[j])) {
          throw UnclassifiableVector(describe(w) + ": (w_i +- w_j)/2 outside {0,+-1,+-2,+-4}");
        }
      }
    }
    if (w[0] + w[1] != 4) throw UnclassifiableVector(describe(w) + ": inner product with V0 is not 2");
    if (pipeline == Pipeline::k891 && w[0] + w[2] != 4) {
      throw UnclassifiableVector(describe(w) + ": inner product with V1 is not 2");
    }
    const auto label = pipeline == Pipeline::k891 ? match_891(w) : match_4600(w);
    if (!label) throw UnclassifiableVector(describe(w) + ": matches no case");
    split.cases[*label].push_back(w);
    if (*label == CaseLabel::kIII) d.insert(tail_support(w, split.tail_start));
    if (*label == CaseLabel::kIV) e.insert(tail_plus_ones(w, split.tail_start));
  }
  split.d_code.assign(d.begin(), d.end());
  split.e_code.assign(e.begin(), e.end());
  return split;
}

ParityResult parity_check(const CaseSplit& split, const FrameCoords& w0) {
  ParityResult r;
  const bool want_even = split.pipeline == Pipeline::k891;
  std::map<F2Word, std::set<F2Word>> patterns;
  auto it = split.cases.find(CaseLabel::kIII);
  if (it == split.cases.end()) return r;
  for (const auto& v : it->second) {
    int minus = 0;
    F2Word signs = 0;
    for (std::size_t j = split.tail_start; j < kLeechDim; ++j) {
      if (v[j] < 0) {
        ++minus;
        signs |= F2Word{1} << (j - split.tail_start);
      }
    }
    if ((minus % 2 == 0) != want_even) {
      throw ParityViolation(describe(v) + " has " + std::to_string(minus) + " minus signs");
    }
    std::int64_t dot = 0;
    for (std::size_t i = 0; i < kLeechDim; ++i) dot += static_cast<std::int64_t>(v[i]) * w0[i];
    const std::int64_t expected = want_even ? 4 * minus : 4 * minus - 4;
    if (dot != expected) {
      throw ParityViolation(describe(v) + ": inner product with W0 is " + to_string(make_rational(dot, 8)) +
                            ", expected " + to_string(make_rational(expected, 8)));
    }
    patterns[tail_support(v, split.tail_start)].insert(signs);
    ++r.vectors;
  }
  r.codewords = patterns.size();
  bool first = true;
  for (const auto& [support, signs] : patterns) {
    r.min_patterns = first ? signs.size() : std::min(r.min_patterns, signs.size());
    r.max_patterns = first ? signs.size() : std::max(r.max_patterns, signs.size());
    first = false;
  }
  return r;
}

GenerationResult generation_check(const CaseSplit& split) {
  GenerationResult g;
  const std::size_t pre = split.tail_start;  // 3 or 2 leading ones
  const F2Word ones = (F2Word{1} << pre) - 1;
  std::vector<F2Word> rows;
  for (F2Word d : split.d_code) rows.push_back(ones | (d << pre));
  g.rank = f2_basis(rows).size();
  g.span_count = f2_span_count_with_prefix(rows, F2Prefix{0, static_cast<unsigned>(pre)});

  std::set<F2Word> zero_prefix;
  for (F2Word w : f2_enumerate_span(rows)) {
    if ((w & ones) == 0) zero_prefix.insert(w >> pre);
  }
  std::set<F2Word> c_parts(split.e_code.begin(), split.e_code.end());
  g.case_iv_count = split.count(CaseLabel::kIV);
  g.case_iv_in_span = true;
  g.weights_divisible_by_4 = true;
  for (F2Word c : c_parts) {
    if (weight(c) % 4 != 0) g.weights_divisible_by_4 = false;
    if (!zero_prefix.count(c)) {
      throw SpanMismatch("c-part " + to_bit_string(c, split.tail_length()) + " is not in the span of the prefixed blocks");
    }
  }
  g.sets_equal = zero_prefix == c_parts && c_parts.size() == g.case_iv_count;

  // Differences of Case IV vectors are 2(c - c'), of raw norm 4 d(c, c').
  std::int64_t best = -1;
  auto it = split.cases.find(CaseLabel::kIV);
  if (it != split.cases.end()) {
    const auto& iv = it->second;
    for (std::size_t a = 0; a < iv.size(); ++a) {
      for (std::size_t b = a + 1; b < iv.size(); ++b) {
        std::int64_t n = 0;
        for (std::size_t i = 0; i < kLeechDim; ++i) n += static_cast<std::int64_t>(iv[a][i] - iv[b][i]) * (iv[a][i] - iv[b][i]);
        if (best < 0 || n < best) best = n;
      }
    }
  }
  g.min_difference_raw_norm = best;

  if (split.pipeline == Pipeline::k4600) {
    std::set<FrameCoords> v_from_iv, v_actual;
    FrameCoords v0{};
    v0[0] = 4;
    v0[1] = 4;
    if (it != split.cases.end()) {
      for (const auto& w : it->second) {
        FrameCoords d{};
        for (std::size_t i = 0; i < kLeechDim; ++i) d[i] = v0[i] - w[i];
        v_from_iv.insert(d);
      }
    }
    auto iv = split.cases.find(CaseLabel::kV);
    if (iv != split.cases.end()) v_actual.insert(iv->second.begin(), iv->second.end());
    g.case_v_is_v0_minus_case_iv = v_from_iv == v_actual;
  }
  return g;
}

}  // namespace leechcert
