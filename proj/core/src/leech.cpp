#include "leechcert/leech.hpp"

#include "leechcert/errors.hpp"
#include "leechcert/pairwise.hpp"

#include <algorithm>
#include <cstdlib>

namespace leechcert {

ScaledVector ScaledVector::operator-() const {
  ScaledVector r;
  for (std::size_t i = 0; i < kLeechDim; ++i) r.coords[i] = static_cast<std::int8_t>(-coords[i]);
  return r;
}

ScaledVector operator+(const ScaledVector& a, const ScaledVector& b) {
  ScaledVector r;
  for (std::size_t i = 0; i < kLeechDim; ++i) r.coords[i] = static_cast<std::int8_t>(a.coords[i] + b.coords[i]);
  return r;
}

ScaledVector operator-(const ScaledVector& a, const ScaledVector& b) {
  ScaledVector r;
  for (std::size_t i = 0; i < kLeechDim; ++i) r.coords[i] = static_cast<std::int8_t>(a.coords[i] - b.coords[i]);
  return r;
}

Rational inner(const ScaledVector& v, const ScaledVector& w) {
  return make_rational(raw_dot(v, w), kScaleSquared);
}

Rational inner(std::span<const std::int64_t> v, std::span<const std::int64_t> w) {
  if (v.size() != w.size()) throw DimensionMismatch("inner: vectors have different dimensions");
  BigInt s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += BigInt(static_cast<long>(v[i])) * static_cast<long>(w[i]);
  return make_rational(s, BigInt(kScaleSquared));
}

Rational norm(const ScaledVector& v) { return inner(v, v); }

std::vector<std::int64_t> to_int_vector(const ScaledVector& v) {
  return std::vector<std::int64_t>(v.coords.begin(), v.coords.end());
}

BinaryCode::BinaryCode(unsigned length, std::vector<F2Word> words) : length_(length), words_(std::move(words)) {
  if (length == 0 || length > 64) throw InvalidParameters("binary code length must be in 1..64");
  const F2Word mask = length == 64 ? ~F2Word{0} : ((F2Word{1} << length) - 1);
  for (F2Word w : words_) {
    if (w & ~mask) throw DimensionMismatch("codeword longer than code length");
  }
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool BinaryCode::contains(F2Word w) const { return std::binary_search(words_.begin(), words_.end(), w); }

std::map<int, std::size_t> BinaryCode::weight_distribution() const {
  std::map<int, std::size_t> d;
  for (F2Word w : words_) ++d[weight(w)];
  return d;
}

int BinaryCode::minimum_distance() const {
  int best = static_cast<int>(length_) + 1;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (std::size_t j = i + 1; j < words_.size(); ++j) best = std::min(best, distance(words_[i], words_[j]));
  }
  return best;
}

std::vector<F2Word> golay_generators() {
  // g(x) = 1 + x^2 + x^4 + x^5 + x^6 + x^10 + x^11 generates the cyclic [23,12,7] code.
  constexpr F2Word g = 0xC75;
  std::vector<F2Word> rows;
  for (unsigned i = 0; i < 12; ++i) {
    F2Word r = g << i;
    if (weight(r) % 2 == 1) r |= F2Word{1} << 23;  // overall parity
    rows.push_back(r);
  }
  return rows;
}

BinaryCode build_golay() {
  BinaryCode code(24, f2_enumerate_span(golay_generators()));
  const std::map<int, std::size_t> expected{{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}};
  if (code.size() != 4096 || code.weight_distribution() != expected) {
    throw Error("Golay construction failed its weight-distribution check");
  }
  return code;
}

LeechShape classify_shape(const ScaledVector& v) {
  int fours = 0, twos = 0, odd = 0, zeros = 0;
  for (auto c : v.coords) {
    const int a = std::abs(static_cast<int>(c));
    if (a == 4) ++fours;
    else if (a == 2) ++twos;
    else if (a == 1 || a == 3) ++odd;
    else if (a == 0) ++zeros;
  }
  if (fours == 2 && zeros == 22) return LeechShape::kFourFour;
  if (twos == 8 && zeros == 16) return LeechShape::kOctad;
  if (odd == 24) return LeechShape::kOdd;
  return LeechShape::kOther;
}

std::vector<ScaledVector> leech_minimal_vectors() {
  const BinaryCode golay = build_golay();
  std::vector<ScaledVector> out;
  out.reserve(196560);

  // (+-4, +-4, 0^22)
  for (std::size_t i = 0; i < kLeechDim; ++i) {
    for (std::size_t j = i + 1; j < kLeechDim; ++j) {
      for (int si : {-4, 4}) {
        for (int sj : {-4, 4}) {
          ScaledVector v;
          v.coords[i] = static_cast<std::int8_t>(si);
          v.coords[j] = static_cast<std::int8_t>(sj);
          out.push_back(v);
        }
      }
    }
  }

  // (+-2^8, 0^16) on octads, even number of minus signs
  for (F2Word w : golay.words()) {
    if (weight(w) != 8) continue;
    std::array<std::size_t, 8> pos{};
    std::size_t k = 0;
    for (std::size_t i = 0; i < kLeechDim; ++i) {
      if ((w >> i) & 1U) pos[k++] = i;
    }
    for (unsigned signs = 0; signs < 256; ++signs) {
      if (__builtin_popcount(signs) % 2 != 0) continue;
      ScaledVector v;
      for (std::size_t b = 0; b < 8; ++b) v.coords[pos[b]] = static_cast<std::int8_t>(((signs >> b) & 1U) ? -2 : 2);
      out.push_back(v);
    }
  }

  // (-3, 1^23) with signs flipped on a Golay codeword
  for (F2Word w : golay.words()) {
    for (std::size_t p = 0; p < kLeechDim; ++p) {
      ScaledVector v;
      for (std::size_t i = 0; i < kLeechDim; ++i) {
        int x = i == p ? -3 : 1;
        if ((w >> i) & 1U) x = -x;
        v.coords[i] = static_cast<std::int8_t>(x);
      }
      out.push_back(v);
    }
  }

  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ScaledVector> neighbors(std::span<const ScaledVector> pool, const ScaledVector& anchor,
                                    const Rational& target) {
  std::vector<ScaledVector> out;
  const Rational raw = target * kScaleSquared;
  if (!is_integer(raw) || !raw.get_num().fits_slong_p()) return out;
  const std::int64_t want = raw.get_num().get_si();
  for (const auto& v : pool) {
    if (raw_dot(v, anchor) == want) out.push_back(v);
  }
  return out;
}

std::map<Rational, std::size_t> inner_product_histogram(std::span<const ScaledVector> pool,
                                                        const ScaledVector& anchor) {
  std::map<std::int64_t, std::size_t> raw;
  for (const auto& v : pool) ++raw[raw_dot(v, anchor)];
  std::map<Rational, std::size_t> h;
  for (const auto& [k, c] : raw) h[make_rational(k, kScaleSquared)] = c;
  return h;
}

MinimalPairScan scan_minimal_pairs(std::span<const ScaledVector> vectors, unsigned threads) {
  MinimalPairScan scan;
  scan.all_norm_four = std::all_of(vectors.begin(), vectors.end(),
                                   [](const ScaledVector& v) { return raw_dot(v, v) == 4 * kScaleSquared; });
  std::vector<ScaledVector> sorted(vectors.begin(), vectors.end());
  std::sort(sorted.begin(), sorted.end());
  scan.negation_closed = !sorted.empty();
  for (const auto& v : sorted) {
    if (!std::binary_search(sorted.begin(), sorted.end(), -v)) {
      scan.negation_closed = false;
      break;
    }
  }
  for (const auto& [raw, c] : pair_dot_histogram_symmetric(sorted, threads)) {
    scan.histogram[make_rational(raw, kScaleSquared)] += c;
  }
  scan.closure_ok = true;
  for (const auto& [ip, c] : scan.histogram) {
    if (c == 0) continue;
    if (!(ip == 0 || ip == 1 || ip == -1 || ip == 2 || ip == -2 || ip == 4 || ip == -4)) scan.closure_ok = false;
  }
  return scan;
}

}  // namespace leechcert
