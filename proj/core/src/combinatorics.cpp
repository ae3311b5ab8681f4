#include "leechcert/combinatorics.hpp"

#include "leechcert/errors.hpp"

#include <array>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace leechcert {

namespace {

/** Calls f(word) for every t-subset of {0..v-1}. */
template <typename F>
void for_each_subset(unsigned v, unsigned t, F&& f) {
  if (t > v) return;
  std::vector<unsigned> idx(t);
  for (unsigned i = 0; i < t; ++i) idx[i] = i;
  for (;;) {
    F2Word w = 0;
    for (unsigned i : idx) w |= F2Word{1} << i;
    f(w);
    int i = static_cast<int>(t) - 1;
    while (i >= 0 && idx[static_cast<unsigned>(i)] == v - t + static_cast<unsigned>(i)) --i;
    if (i < 0) return;
    ++idx[static_cast<unsigned>(i)];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// GF(4) = {0, 1, w, w^2} encoded 0..3; addition is XOR.
constexpr std::array<std::array<int, 4>, 4> kMul{{{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}}};

using Triple = std::array<int, 3>;

std::vector<Triple> normalized_triples() {
  std::vector<Triple> out;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      for (int c = 0; c < 4; ++c) {
        const Triple p{a, b, c};
        const int lead = a ? a : (b ? b : c);
        if (lead == 1) out.push_back(p);
      }
    }
  }
  return out;
}

}  // namespace

SteinerCheck verify_steiner(const BinaryCode& blocks, unsigned t, unsigned k, unsigned v) {
  SteinerCheck check;
  if (v != blocks.length()) {
    check.reason = "code length " + std::to_string(blocks.length()) + " differs from v = " + std::to_string(v);
    return check;
  }
  if (t == 0 || t > k || k > v) {
    check.reason = "parameters must satisfy 0 < t <= k <= v";
    return check;
  }
  for (F2Word b : blocks.words()) {
    if (weight(b) != static_cast<int>(k)) {
      check.witness = b;
      check.reason = "block of weight " + std::to_string(weight(b));
      return check;
    }
  }
  check.ok = true;
  for_each_subset(v, t, [&](F2Word s) {
    if (!check.ok) return;
    std::size_t covered = 0;
    for (F2Word b : blocks.words()) {
      if ((b & s) == s) ++covered;
    }
    if (covered != 1) {
      check.ok = false;
      check.witness = s;
      check.witness_cover_count = covered;
      check.reason = "t-subset covered " + std::to_string(covered) + " times";
    }
  });
  return check;
}

SteinerSystem build_pg24() {
  const auto pts = normalized_triples();  // 21 points, and by duality 21 lines
  std::vector<F2Word> lines;
  for (const auto& l : pts) {
    F2Word w = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const int dot = kMul[l[0]][pts[i][0]] ^ kMul[l[1]][pts[i][1]] ^ kMul[l[2]][pts[i][2]];
      if (dot == 0) w |= F2Word{1} << i;
    }
    lines.push_back(w);
  }
  SteinerSystem s{2, 5, 21, BinaryCode(21, std::move(lines))};
  const auto check = verify_steiner(s.blocks, 2, 5, 21);
  if (!check.ok || s.blocks.size() != 21) throw Error("projective plane construction failed: " + check.reason);
  return s;
}

SteinerSystem build_s3622() {
  const SteinerSystem plane = build_pg24();
  // Hyperovals: 6 points, no three on a line, i.e. every line meets them in 0 or 2 points.
  std::vector<F2Word> hyperovals;
  for_each_subset(21, 6, [&](F2Word h) {
    for (F2Word l : plane.blocks.words()) {
      const int m = weight(h & l);
      if (m != 0 && m != 2) return;
    }
    hyperovals.push_back(h);
  });
  if (hyperovals.empty()) throw Error("no hyperovals found");
  const F2Word h0 = hyperovals.front();
  std::vector<F2Word> blocks;
  const F2Word infinity = F2Word{1} << 21;
  for (F2Word l : plane.blocks.words()) blocks.push_back(l | infinity);
  for (F2Word h : hyperovals) {
    if (weight(h & h0) % 2 == 0) blocks.push_back(h);
  }
  SteinerSystem s{3, 6, 22, BinaryCode(22, std::move(blocks))};
  const auto check = verify_steiner(s.blocks, 3, 6, 22);
  if (!check.ok || s.blocks.size() != 77) throw Error("one-point extension failed: " + check.reason);
  return s;
}

std::map<int, std::uint64_t> distance_profile(const BinaryCode& code) {
  std::map<int, std::uint64_t> profile;
  const auto& w = code.words();
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) ++profile[distance(w[i], w[j])];
  }
  return profile;
}

void write_steiner(std::ostream& out, const SteinerSystem& s) {
  out << "steiner " << s.t << ' ' << s.k << ' ' << s.v << ' ' << s.blocks.size() << '\n';
  for (F2Word b : s.blocks.words()) {
    bool first = true;
    for (unsigned i = 0; i < s.v; ++i) {
      if ((b >> i) & 1U) {
        out << (first ? "" : " ") << i;
        first = false;
      }
    }
    out << '\n';
  }
}

SteinerSystem read_steiner(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty Steiner block file");
  std::istringstream hs(line);
  std::string tag;
  unsigned t = 0, k = 0, v = 0;
  std::size_t count = 0;
  if (!(hs >> tag >> t >> k >> v >> count) || tag != "steiner") throw ParseError("bad Steiner header: " + line);
  if (v == 0 || v > 64) throw ParseError("point count must be in 1..64");
  std::vector<F2Word> blocks;
  for (std::size_t r = 0; r < count; ++r) {
    if (!std::getline(in, line)) throw ParseError("missing block " + std::to_string(r));
    std::istringstream ss(line);
    F2Word w = 0;
    long p = 0;
    while (ss >> p) {
      if (p < 0 || p >= static_cast<long>(v)) throw ParseError("point index out of range in block " + std::to_string(r));
      w |= F2Word{1} << p;
    }
    if (!ss.eof()) throw ParseError("non-integer data in block " + std::to_string(r));
    blocks.push_back(w);
  }
  return SteinerSystem{t, k, v, BinaryCode(v, std::move(blocks))};
}

}  // namespace leechcert
