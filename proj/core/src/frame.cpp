#include "leechcert/frame.hpp"

#include "leechcert/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace leechcert {

std::string to_string(Pipeline p) { return p == Pipeline::k891 ? "891" : "4600"; }

std::int64_t raw_dot(const ScaledVector& v, const WideVector& w) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < kLeechDim; ++i) s += static_cast<std::int64_t>(v.coords[i]) * w[i];
  return s;
}

std::int64_t raw_dot(const WideVector& v, const WideVector& w) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < kLeechDim; ++i) s += static_cast<std::int64_t>(v[i]) * w[i];
  return s;
}

WideVector widen(const ScaledVector& v) {
  WideVector w{};
  for (std::size_t i = 0; i < kLeechDim; ++i) w[i] = v.coords[i];
  return w;
}

namespace {

constexpr std::int64_t kNorm4 = 4 * kScaleSquared;  // raw norm of a minimal vector
constexpr std::int64_t kIp2 = 2 * kScaleSquared;

std::string describe(const ScaledVector& v) {
  std::ostringstream ss;
  ss << '(';
  for (std::size_t i = 0; i < kLeechDim; ++i) ss << (i ? "," : "") << static_cast<int>(v.coords[i]);
  ss << ')';
  return ss.str();
}

WideVector scale_add(const WideVector& a, std::int32_t k, const WideVector& b) {
  WideVector r{};
  for (std::size_t i = 0; i < kLeechDim; ++i) r[i] = a[i] + k * b[i];
  return r;
}

ScaledVector narrow(const WideVector& w) {
  ScaledVector v;
  for (std::size_t i = 0; i < kLeechDim; ++i) {
    if (w[i] < -127 || w[i] > 127) throw Error("frame vector coordinate out of range");
    v.coords[i] = static_cast<std::int8_t>(w[i]);
  }
  return v;
}

/** Order of candidate indices: 0..n-1 rotated to start at seed. */
std::vector<std::size_t> rotated(std::size_t n, std::size_t seed) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = (i + seed) % n;
  return idx;
}

}  // namespace

AssembledLattice assemble_L(std::span<const ScaledVector> members, std::span<const ScaledVector> anchors) {
  AssembledLattice out;
  out.generators.assign(anchors.begin(), anchors.end());
  out.generators.insert(out.generators.end(), members.begin(), members.end());
  const auto& g = out.generators;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const std::int64_t n = raw_dot(g[i], g[i]);
    if (n % (2 * kScaleSquared) != 0) throw NotEven("generator " + describe(g[i]) + " has odd norm");
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (raw_dot(g[i], g[j]) % kScaleSquared != 0) {
        throw NotIntegral("generators " + describe(g[i]) + " and " + describe(g[j]) + " have non-integral inner product");
      }
    }
  }
  if (!members.empty() && !anchors.empty()) {
    const DerivedCode code = DerivedCode::from_chain({anchors.begin(), anchors.end()}, {members.begin(), members.end()});
    for (const auto& [raw, c] : pair_dot_histogram(code.members())) {
      out.translation[code.project(raw)] = make_rational(raw, kScaleSquared);
    }
    out.translation[Rational(1)] = make_rational(raw_dot(members.front(), members.front()), kScaleSquared);
  }
  return out;
}

bool minimal_ip_closure_check(std::span<const ScaledVector> members, std::span<const ScaledVector> anchors) {
  std::vector<ScaledVector> g(anchors.begin(), anchors.end());
  g.insert(g.end(), members.begin(), members.end());
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i; j < g.size(); ++j) {
      const std::int64_t r = std::abs(raw_dot(g[i], g[j]));
      if (r % kScaleSquared != 0) return false;
      const std::int64_t ip = r / kScaleSquared;
      if (ip != 0 && ip != 1 && ip != 2 && ip != 4) return false;
    }
  }
  return true;
}

bool in_sqrt2_dn(const ScaledVector& v, const D24Frame& frame, std::size_t n) {
  // <v, 2 sqrt2 E_i> in raw units is 32 a_i.
  std::int64_t sum_sq = 0, sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t r = raw_dot(v, frame.E2[i]);
    if (r % 32 != 0) return false;
    const std::int64_t a = r / 32;
    sum_sq += a * a;
    sum += a;
  }
  // |v|^2 = sum 2 a_i^2, i.e. raw norm 16 sum a_i^2.
  return 16 * sum_sq == raw_dot(v, v) && sum % 2 == 0;
}

D24Frame find_d24_frame(std::span<const ScaledVector> members, std::span<const ScaledVector> anchors,
                        std::size_t seed) {
  if (members.empty() || anchors.empty()) throw InvalidParameters("frame search needs members and at least one anchor");
  const std::size_t m = members.size();
  const auto order = rotated(m, seed);
  D24Frame f;

  const ScaledVector g1 = members[order[0]];
  std::optional<ScaledVector> g2;
  for (std::size_t i : order) {
    if (raw_dot(members[i], g1) == 0) {
      g2 = members[i];
      break;
    }
  }
  if (!g2) throw ExtensionStuck("no member orthogonal to G_1 (step 2)");
  std::optional<ScaledVector> g3;
  for (std::size_t i : order) {
    if (raw_dot(members[i], g1) == kIp2 && raw_dot(members[i], *g2) == kIp2) {
      g3 = -members[i];
      break;
    }
  }
  if (!g3) throw ExtensionStuck("no member at inner product 2 with G_1 and G_2 (step 3)");
  f.G = {g1, *g2, *g3};
  const WideVector G1 = widen(g1), G2 = widen(*g2), G3 = widen(*g3);
  // 2 sqrt2 E_1 = G_2 - G_1, 2 sqrt2 E_2 = -(G_1 + G_2), 2 sqrt2 E_3 = 2 sqrt2 E_2 - 2 G_3.
  f.E2.push_back(scale_add(G2, -1, G1));
  WideVector e2{};
  for (std::size_t i = 0; i < kLeechDim; ++i) e2[i] = -(G1[i] + G2[i]);
  f.E2.push_back(e2);
  f.E2.push_back(scale_add(e2, -2, G3));

  // Pool: members at 2 from G_1 and G_2, anchors, and V_0 - U for U orthogonal to both.
  std::vector<ScaledVector> pool(anchors.begin(), anchors.end());
  for (std::size_t i : order) {
    const auto& u = members[i];
    if (raw_dot(u, g1) == 0 && raw_dot(u, *g2) == 0) {
      ++f.orthogonal_pair_members;
      pool.push_back(anchors[0] - u);
    }
  }
  for (std::size_t i : order) {
    const auto& u = members[i];
    if (raw_dot(u, g1) == kIp2 && raw_dot(u, *g2) == kIp2) pool.push_back(u);
  }

  {
    std::vector<ScaledVector> distinct;
    std::vector<ScaledVector> seen;
    for (const auto& w : pool) {
      auto it = std::lower_bound(seen.begin(), seen.end(), w);
      if (it != seen.end() && *it == w) continue;
      seen.insert(it, w);
      distinct.push_back(w);
    }
    pool = std::move(distinct);
  }

  for (std::size_t n = 3; n < kLeechDim; ++n) {
    std::size_t admissible = 0;
    std::optional<ScaledVector> chosen;
    for (const auto& w : pool) {
      if (raw_dot(w, w) != kNorm4 || raw_dot(w, g1) != kIp2 || raw_dot(w, *g2) != kIp2) continue;
      ++admissible;
      if (!chosen && !in_sqrt2_dn(w, f, n)) chosen = w;
    }
    f.pool_sizes.push_back(admissible);
    if (!chosen) throw ExtensionStuck("every candidate lies in sqrt(2)D_" + std::to_string(n));
    // sqrt2 E_{n+1} = W + sqrt2 E_2; G_{n+1} = -(G_3 + ... + G_n) - W.
    const WideVector w = widen(*chosen);
    f.E2.push_back(scale_add(f.E2[1], 2, w));
    WideVector g{};
    for (std::size_t k = 2; k < n; ++k) {
      for (std::size_t i = 0; i < kLeechDim; ++i) g[i] -= f.G[k].coords[i];
    }
    for (std::size_t i = 0; i < kLeechDim; ++i) g[i] -= w[i];
    f.G.push_back(narrow(g));
  }
  if (auto problem = check_frame(f)) throw Error("constructed frame is invalid: " + *problem);
  return f;
}

std::optional<std::string> check_frame(const D24Frame& f) {
  if (f.G.size() != kLeechDim || f.E2.size() != kLeechDim) return "frame must have 24 generators and 24 frame vectors";
  for (std::size_t i = 0; i < kLeechDim; ++i) {
    for (std::size_t j = i; j < kLeechDim; ++j) {
      std::int64_t want = 0;
      if (i == j) want = kNorm4;
      else if (i == 0 && j == 2) want = -kIp2;
      else if (i >= 1 && j == i + 1 && i != 1) want = -kIp2;
      else if (i == 1 && j == 2) want = -kIp2;
      if (raw_dot(f.G[i], f.G[j]) != want) {
        return "Gram entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") is " +
               to_string(make_rational(raw_dot(f.G[i], f.G[j]), kScaleSquared));
      }
      const std::int64_t e = raw_dot(f.E2[i], f.E2[j]);
      // <2 sqrt2 E_i, 2 sqrt2 E_j> = 8 delta_ij, i.e. raw 64 delta_ij.
      if (e != (i == j ? 64 : 0)) {
        return "frame vectors " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " are not orthonormal";
      }
    }
  }
  return std::nullopt;
}

FrameCoords coordinates_in_frame(const ScaledVector& w, const D24Frame& frame) {
  if (frame.E2.size() != kLeechDim) throw InvalidParameters("incomplete frame");
  FrameCoords c{};
  std::int64_t sum_sq = 0;
  for (std::size_t i = 0; i < kLeechDim; ++i) {
    const std::int64_t r = raw_dot(w, frame.E2[i]);
    if (r % 8 != 0) throw NonIntegerCoordinate("vector " + describe(w) + " has a non-integer frame coordinate");
    c[i] = static_cast<int>(r / 8);
    sum_sq += static_cast<std::int64_t>(c[i]) * c[i];
  }
  if (sum_sq != raw_dot(w, w)) throw NonIntegerCoordinate("vector " + describe(w) + " is not in the span of the frame");
  return c;
}

namespace {

/** Positions of +-4 entries of a (+-4, +-4, 0^22) coordinate vector. */
std::vector<std::size_t> four_positions(const FrameCoords& c, const char* name) {
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < kLeechDim; ++i) {
    if (std::abs(c[i]) == 4) pos.push_back(i);
    else if (c[i] != 0) throw NormalizationImpossible(std::string(name) + " is not of shape (+-4,+-4,0,...)");
  }
  if (pos.size() != 2) throw NormalizationImpossible(std::string(name) + " is not of shape (+-4,+-4,0,...)");
  return pos;
}

}  // namespace

D24Frame normalize_frame(const D24Frame& frame, const ScaledVector& v0, const std::optional<ScaledVector>& v1,
                         std::span<const ScaledVector> members, Pipeline pipeline) {
  const FrameCoords c0 = coordinates_in_frame(v0, frame);
  const auto p0 = four_positions(c0, "V0");
  std::vector<std::size_t> lead;  // old positions that become coordinates 1, 2 (, 3)
  if (v1) {
    const FrameCoords c1 = coordinates_in_frame(*v1, frame);
    const auto p1 = four_positions(c1, "V1");
    std::optional<std::size_t> shared;
    for (std::size_t a : p0) {
      for (std::size_t b : p1) {
        if (a == b) shared = a;
      }
    }
    if (!shared || c0[*shared] != c1[*shared]) throw NormalizationImpossible("V0 and V1 do not share a +-4 coordinate");
    const std::size_t other0 = p0[0] == *shared ? p0[1] : p0[0];
    const std::size_t other1 = p1[0] == *shared ? p1[1] : p1[0];
    lead = {*shared, other0, other1};
  } else {
    lead = {p0[0], p0[1]};
  }
  std::vector<std::size_t> perm = lead;
  for (std::size_t i = 0; i < kLeechDim; ++i) {
    if (std::find(lead.begin(), lead.end(), i) == lead.end()) perm.push_back(i);
  }
  D24Frame out = frame;
  for (std::size_t j = 0; j < kLeechDim; ++j) {
    WideVector e = frame.E2[perm[j]];
    int sign = 1;
    if (j == 0 || j == 1) sign = c0[perm[j]] > 0 ? 1 : -1;
    if (j == 2 && v1) sign = coordinates_in_frame(*v1, frame)[perm[j]] > 0 ? 1 : -1;
    if (sign < 0) {
      for (auto& x : e) x = -x;
    }
    out.E2[j] = e;
  }

  // Case IV representative: first member with w_1 = 3; flip the trailing +1 coordinates.
  const std::size_t first_free = v1 ? 3 : 2;
  std::optional<ScaledVector> w0;
  for (const auto& u : members) {
    if (coordinates_in_frame(u, out)[0] == 3) {
      w0 = u;
      break;
    }
  }
  if (!w0) throw NormalizationImpossible("no member with first coordinate 3");
  const FrameCoords cw = coordinates_in_frame(*w0, out);
  for (std::size_t j = first_free; j < kLeechDim; ++j) {
    if (cw[j] == 1) {
      for (auto& x : out.E2[j]) x = -x;
    }
  }
  out.w0 = w0;

  FrameCoords want0{};
  want0[0] = 4;
  want0[1] = 4;
  if (coordinates_in_frame(v0, out) != want0) throw NormalizationImpossible("V0 did not normalize");
  if (v1) {
    FrameCoords want1{};
    want1[0] = 4;
    want1[2] = 4;
    if (coordinates_in_frame(*v1, out) != want1) throw NormalizationImpossible("V1 did not normalize");
  }
  FrameCoords wantw{};
  wantw.fill(-1);
  wantw[0] = 3;
  wantw[1] = 1;
  if (pipeline == Pipeline::k891) wantw[2] = 1;
  if (coordinates_in_frame(*w0, out) != wantw) throw NormalizationImpossible("W0 did not normalize");
  if (auto problem = check_frame(out)) throw NormalizationImpossible(*problem);
  return out;
}

}  // namespace leechcert
