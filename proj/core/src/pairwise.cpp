#include "leechcert/pairwise.hpp"

#include "leechcert/parallel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace leechcert {

namespace {

constexpr std::size_t kBlock = 256;
constexpr std::array<std::int16_t, 9> kFastValues{-32, -24, -16, -8, 0, 8, 16, 24, 32};
// |dot| <= 24 * 36^2 < 2^15, so int16 accumulation cannot overflow.
constexpr int kMaxFastEntry = 36;

bool fits_fast_kernel(std::span<const ScaledVector> vs) {
  for (const auto& v : vs) {
    for (auto c : v.coords) {
      if (std::abs(static_cast<int>(c)) > kMaxFastEntry) return false;
    }
  }
  return true;
}

/** Column-major copy: column c holds coordinate c of every vector. */
struct Columns {
  explicit Columns(std::span<const ScaledVector> vs) : n(vs.size()), data(kLeechDim * vs.size()) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t c = 0; c < kLeechDim; ++c) data[c * n + j] = vs[j].coords[c];
    }
  }
  const std::int16_t* column(std::size_t c) const { return data.data() + c * n; }
  std::size_t n;
  std::vector<std::int16_t> data;
};

struct FastCounts {
  std::array<std::uint64_t, kFastValues.size()> bins{};
  std::uint64_t pairs = 0;
};

/** Kept out of line so the compiler vectorizes over k rather than over the targets. */
[[gnu::noinline]] std::uint32_t count_equal(const std::int16_t* acc, std::size_t len, std::int16_t target) {
  std::uint32_t hits = 0;
  for (std::size_t k = 0; k < len; ++k) hits += acc[k] == target ? 1U : 0U;
  return hits;
}

/** Counts dots of v against columns [begin, end) of `cols`. */
void count_row(const ScaledVector& v, const Columns& cols, std::size_t begin, std::size_t end, FastCounts& out) {
  alignas(64) std::int16_t acc[kBlock];
  for (std::size_t j0 = begin; j0 < end; j0 += kBlock) {
    const std::size_t len = std::min(kBlock, end - j0);
    std::fill_n(acc, len, std::int16_t{0});
    for (std::size_t c = 0; c < kLeechDim; ++c) {
      const std::int16_t a = v.coords[c];
      if (a == 0) continue;
      const std::int16_t* col = cols.column(c) + j0;
      for (std::size_t k = 0; k < len; ++k) acc[k] = static_cast<std::int16_t>(acc[k] + a * col[k]);
    }
    for (std::size_t m = 0; m < kFastValues.size(); ++m) {
      const std::int16_t target = kFastValues[m];
      out.bins[m] += count_equal(acc, len, target);
    }
    out.pairs += len;
  }
}

DotHistogram to_histogram(const FastCounts& f) {
  DotHistogram h;
  for (std::size_t m = 0; m < kFastValues.size(); ++m) {
    if (f.bins[m] != 0) h[kFastValues[m]] = f.bins[m];
  }
  return h;
}

void merge(DotHistogram& into, const DotHistogram& from) {
  for (const auto& [k, v] : from) into[k] += v;
}

/** Row boundaries giving each chunk roughly equal numbers of i<j pairs. */
std::vector<std::size_t> triangle_boundaries(std::size_t n, std::size_t chunks) {
  std::vector<std::size_t> bounds{0};
  const double total = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  double acc = 0;
  std::size_t next = 1;
  for (std::size_t i = 0; i < n && next < chunks; ++i) {
    acc += static_cast<double>(n - 1 - i);
    if (acc >= total * static_cast<double>(next) / static_cast<double>(chunks)) {
      bounds.push_back(i + 1);
      ++next;
    }
  }
  if (bounds.back() != n) bounds.push_back(n);
  return bounds;
}

DotHistogram scalar_pairs(std::span<const ScaledVector> vs, unsigned threads) {
  const auto bounds = triangle_boundaries(vs.size(), 64);
  const std::size_t chunks = bounds.size() - 1;
  std::vector<DotHistogram> partial(chunks);
  parallel_chunks(chunks, chunks, threads, [&](std::size_t c, std::size_t, std::size_t) {
    for (std::size_t i = bounds[c]; i < bounds[c + 1]; ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) ++partial[c][raw_dot(vs[i], vs[j])];
    }
  });
  DotHistogram h;
  for (const auto& p : partial) merge(h, p);
  return h;
}

DotHistogram scalar_cross(std::span<const ScaledVector> a, std::span<const ScaledVector> b, unsigned threads) {
  const std::size_t chunks = std::min<std::size_t>(64, std::max<std::size_t>(a.size(), 1));
  std::vector<DotHistogram> partial(chunks);
  parallel_chunks(a.size(), chunks, threads, [&](std::size_t c, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      for (const auto& w : b) ++partial[c][raw_dot(a[i], w)];
    }
  });
  DotHistogram h;
  for (const auto& p : partial) merge(h, p);
  return h;
}

std::uint64_t total(const FastCounts& f) {
  std::uint64_t s = 0;
  for (auto b : f.bins) s += b;
  return s;
}

}  // namespace

DotHistogram pair_dot_histogram(std::span<const ScaledVector> vectors, unsigned threads) {
  const std::size_t n = vectors.size();
  if (n < 2) return {};
  if (!fits_fast_kernel(vectors)) return scalar_pairs(vectors, threads);
  const Columns cols(vectors);
  const auto bounds = triangle_boundaries(n, 256);
  const std::size_t chunks = bounds.size() - 1;
  std::vector<FastCounts> partial(chunks);
  parallel_chunks(chunks, chunks, threads, [&](std::size_t c, std::size_t, std::size_t) {
    for (std::size_t i = bounds[c]; i < bounds[c + 1]; ++i) count_row(vectors[i], cols, i + 1, n, partial[c]);
  });
  FastCounts sum;
  for (const auto& p : partial) {
    for (std::size_t m = 0; m < sum.bins.size(); ++m) sum.bins[m] += p.bins[m];
    sum.pairs += p.pairs;
  }
  if (total(sum) != sum.pairs) return scalar_pairs(vectors, threads);
  return to_histogram(sum);
}

DotHistogram pair_dot_histogram_symmetric(std::span<const ScaledVector> vectors, unsigned threads) {
  std::vector<ScaledVector> sorted(vectors.begin(), vectors.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return pair_dot_histogram(vectors, threads);
  std::vector<ScaledVector> reps;
  for (const auto& v : sorted) {
    const ScaledVector neg = -v;
    if (neg == v || !std::binary_search(sorted.begin(), sorted.end(), neg)) {
      return pair_dot_histogram(vectors, threads);
    }
    if (neg < v) reps.push_back(v);
  }
  // A pair {v, w} of representatives stands for {v, w}, {-v, -w} at s and {v, -w}, {-v, w} at -s.
  DotHistogram full;
  for (const auto& [raw, c] : pair_dot_histogram(reps, threads)) {
    full[raw] += 2 * c;
    full[-raw] += 2 * c;
  }
  for (const auto& v : reps) ++full[-raw_dot(v, v)];
  return full;
}

DotHistogram cross_dot_histogram(std::span<const ScaledVector> a, std::span<const ScaledVector> b,
                                 unsigned threads) {
  if (a.empty() || b.empty()) return {};
  if (!fits_fast_kernel(a) || !fits_fast_kernel(b)) return scalar_cross(a, b, threads);
  const Columns cols(b);
  const std::size_t chunks = std::min<std::size_t>(256, a.size());
  std::vector<FastCounts> partial(chunks);
  parallel_chunks(a.size(), chunks, threads, [&](std::size_t c, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) count_row(a[i], cols, 0, b.size(), partial[c]);
  });
  FastCounts sum;
  for (const auto& p : partial) {
    for (std::size_t m = 0; m < sum.bins.size(); ++m) sum.bins[m] += p.bins[m];
    sum.pairs += p.pairs;
  }
  if (total(sum) != sum.pairs) return scalar_cross(a, b, threads);
  return to_histogram(sum);
}

}  // namespace leechcert
