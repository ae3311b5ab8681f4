#include "leechcert/codes.hpp"

#include "leechcert/errors.hpp"
#include "leechcert/linalg.hpp"
#include "leechcert/parallel.hpp"
#include "leechcert/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace leechcert {

namespace {

std::int64_t common_raw_norm(const std::vector<ScaledVector>& members) {
  if (members.empty()) throw InvalidParameters("a derived code needs at least one member");
  const std::int64_t r = raw_dot(members.front(), members.front());
  if (r == 0) throw InvalidParameters("zero vector cannot be a code member");
  for (const auto& m : members) {
    if (raw_dot(m, m) != r) throw InvalidParameters("code members have different norms");
  }
  return r;
}

std::string vector_text(const ScaledVector& v) {
  std::ostringstream ss;
  ss << '(';
  for (std::size_t i = 0; i < kLeechDim; ++i) ss << (i ? "," : "") << static_cast<int>(v.coords[i]);
  ss << ')';
  return ss.str();
}

}  // namespace

DerivedCode::DerivedCode(std::vector<ScaledVector> anchors, std::vector<ScaledVector> members,
                         std::vector<Rational> level_params)
    : anchors_(std::move(anchors)), members_(std::move(members)), level_params_(std::move(level_params)) {
  if (anchors_.size() != level_params_.size()) {
    throw InvalidParameters("one level parameter per anchor is required");
  }
  if (anchors_.size() >= kLeechDim) throw InvalidParameters("too many anchors");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  raw_norm_ = common_raw_norm(members_);
  for (const auto& t : level_params_) {
    if (t >= 1 || t <= -1) throw InvalidParameters("level parameter must lie in (-1, 1)");
  }
}

DerivedCode DerivedCode::root(std::vector<ScaledVector> members) { return DerivedCode({}, std::move(members), {}); }

DerivedCode DerivedCode::from_chain(std::vector<ScaledVector> anchors, std::vector<ScaledVector> members) {
  if (members.empty()) throw InvalidParameters("a derived code needs at least one member");
  // Build level by level: the parameter of level k is read off anchor k.
  std::vector<Rational> params;
  DerivedCode probe({}, members, {});
  for (std::size_t k = 0; k < anchors.size(); ++k) {
    const Rational t = probe.project_levels(raw_dot(anchors[k], probe.members_.front()), k);
    if (t <= -1 || t >= 1) {
      throw InvalidParameters("level " + std::to_string(k) + " parameter " + to_string(t) + " is not in (-1, 1)");
    }
    params.push_back(t);
    probe.level_params_ = params;
    probe.anchors_.assign(anchors.begin(), anchors.begin() + static_cast<std::ptrdiff_t>(k + 1));
  }
  DerivedCode code(std::move(anchors), std::move(members), std::move(params));
  if (auto problem = code.validate()) throw InvalidParameters(*problem);
  return code;
}

Rational DerivedCode::project_levels(std::int64_t raw, std::size_t levels) const {
  Rational s = make_rational(raw, raw_norm_);
  for (std::size_t k = 0; k < levels; ++k) {
    const Rational t2 = level_params_[k] * level_params_[k];
    s = (s - t2) / (1 - t2);
  }
  return s;
}

Rational DerivedCode::project(std::int64_t raw) const { return project_levels(raw, level_params_.size()); }

Rational DerivedCode::projected_inner(const ScaledVector& x, const ScaledVector& y) const {
  return project(raw_dot(x, y));
}

std::optional<std::string> DerivedCode::validate() const {
  for (std::size_t k = 0; k < anchors_.size(); ++k) {
    if (raw_dot(anchors_[k], anchors_[k]) != raw_norm_) {
      return "anchor " + std::to_string(k) + " has a different norm than the members";
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (project_levels(raw_dot(anchors_[j], anchors_[k]), j) != level_params_[j]) {
        return "anchor " + std::to_string(k) + " is not at level parameter " + to_string(level_params_[j]) +
               " from anchor " + std::to_string(j);
      }
    }
    for (const auto& m : members_) {
      if (project_levels(raw_dot(anchors_[k], m), k) != level_params_[k]) {
        return "member " + vector_text(m) + " is not at level parameter " + to_string(level_params_[k]) +
               " from anchor " + std::to_string(k);
      }
    }
  }
  if (project(raw_norm_) != 1) return "self inner product is not 1";
  return std::nullopt;
}

DerivedCode derive_kissing(const DerivedCode& code, const ScaledVector& base) {
  const auto& ms = code.members();
  if (!std::binary_search(ms.begin(), ms.end(), base)) throw InvalidParameters("base is not a member of the code");
  bool any = false;
  std::int64_t best = 0;
  for (const auto& m : ms) {
    if (m == base) continue;
    const std::int64_t r = raw_dot(m, base);
    if (!any || r > best) best = r;
    any = true;
  }
  if (!any) throw EmptyNeighborhood("code has no member other than the base");
  const Rational t = code.project(best);
  if (t >= 1) throw InvalidParameters("maximal projected inner product at the base is 1");
  std::vector<ScaledVector> members;
  for (const auto& m : ms) {
    if (m != base && raw_dot(m, base) == best) members.push_back(m);
  }
  if (members.empty()) throw EmptyNeighborhood("no member attains the maximal inner product");
  auto anchors = code.anchors();
  anchors.push_back(base);
  auto params = code.level_params();
  params.push_back(t);
  return DerivedCode(std::move(anchors), std::move(members), std::move(params));
}

Spectrum spectrum_from_histogram(const DerivedCode& code, const DotHistogram& raw) {
  Spectrum s;
  for (const auto& [r, c] : raw) {
    if (c != 0) s[code.project(r)] += c;
  }
  return s;
}

Spectrum spectrum(const DerivedCode& code, unsigned threads) {
  return spectrum_from_histogram(code, pair_dot_histogram_symmetric(code.members(), threads));
}

std::vector<Rational> gegenbauer_pair_sums(const Spectrum& spec, std::uint64_t size, unsigned dimension,
                                           unsigned k_max) {
  std::vector<Rational> sums;
  for (unsigned k = 1; k <= k_max; ++k) {
    const RationalPolynomial g = gegenbauer(dimension, k);
    Rational s = Rational(BigInt(std::to_string(size)));  // diagonal: G_k(1) = 1
    for (const auto& [ip, c] : spec) s += 2 * Rational(BigInt(std::to_string(c))) * g(ip);
    sums.push_back(s);
  }
  return sums;
}

unsigned design_strength(const Spectrum& spec, std::uint64_t size, unsigned dimension, unsigned k_max) {
  if (k_max < 1) throw InvalidParameters("k_max must be at least 1");
  const auto sums = gegenbauer_pair_sums(spec, size, dimension, k_max);
  unsigned t = 0;
  while (t < sums.size() && sums[t] == 0) ++t;
  return t;
}

unsigned design_strength(const DerivedCode& code, unsigned k_max, unsigned threads) {
  return design_strength(spectrum(code, threads), code.size(), code.dimension(), k_max);
}

Rational sphere_moment(unsigned n, unsigned i, const Rational& r_sq) {
  if (n % 2 != 0) throw OddDimensionUnsupported("sphere moments are implemented for even dimensions only");
  if (n == 0) throw InvalidParameters("dimension must be positive");
  if (r_sq < 0) throw InvalidParameters("squared radius must be nonnegative");
  if (i % 2 != 0) return 0;
  const unsigned h = i / 2;
  const unsigned m = n / 2;
  Rational power = 1;
  for (unsigned k = 0; k < h; ++k) power *= r_sq;
  const BigInt num = factorial(i) * factorial(m - 1);
  const BigInt den = factorial(h + m - 1) * factorial(h) * (BigInt(1) << i);
  return power * make_rational(num, den);
}

Rational DistributionCounts::total() const {
  Rational s = 0;
  for (const auto& [a, c] : counts) s += c;
  return s;
}

Rational DistributionCounts::at(const Rational& alpha) const {
  for (const auto& [a, c] : counts) {
    if (a == alpha) return c;
  }
  throw InvalidParameters("no count for inner product " + to_string(alpha));
}

DistributionCounts solve_distribution(std::uint64_t code_size, unsigned n, const Rational& r_sq,
                                      const std::vector<Rational>& alphas, unsigned strength) {
  if (alphas.empty()) throw InvalidParameters("at least one inner-product value is required");
  if (alphas.size() > static_cast<std::size_t>(strength) + 1) {
    throw InvalidParameters("more unknowns than the design strength supports");
  }
  const std::size_t m = alphas.size();
  RationalMatrix a(m, std::vector<Rational>(m));
  std::vector<Rational> b(m);
  const Rational size(BigInt(std::to_string(code_size)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Rational p = 1;
      for (std::size_t e = 0; e < i; ++e) p *= alphas[j];
      a[i][j] = p;
    }
    b[i] = size * sphere_moment(n, static_cast<unsigned>(i), r_sq);
  }
  const auto x = solve_linear_system(a, b);
  DistributionCounts d;
  for (std::size_t j = 0; j < m; ++j) d.counts.emplace_back(alphas[j], x[j]);
  return d;
}

std::size_t IntersectionTable::index_of(const Rational& value) const {
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if (alphabet[i] == value) return i;
  }
  throw InvalidParameters("inner product " + to_string(value) + " is not in the alphabet");
}

std::uint64_t IntersectionTable::at(const Rational& gamma, const Rational& alpha, const Rational& beta) const {
  return values[index_of(gamma)][index_of(alpha)][index_of(beta)];
}

namespace {

constexpr std::size_t kMaxAlphabet = 16;

struct SchemeChunk {
  /** Per gamma: the first pair seen and its table (flattened a*A+b). */
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> witness;
  std::vector<std::vector<std::uint64_t>> table;
  std::optional<std::string> violation;
};

std::string pair_text(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

IntersectionTable intersection_numbers(const DerivedCode& code, unsigned threads) {
  const auto& ms = code.members();
  const std::size_t n = ms.size();

  // Alphabet: 1 followed by the distinct projected inner products, descending.
  std::map<std::int64_t, Rational> raw_to_ip;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t r = raw_dot(ms[i], ms[j]);
      if (!raw_to_ip.count(r)) raw_to_ip.emplace(r, code.project(r));
    }
  }
  IntersectionTable table;
  for (auto it = raw_to_ip.rbegin(); it != raw_to_ip.rend(); ++it) table.alphabet.push_back(it->second);
  // Projection is increasing in the raw dot, so descending raw order is descending alphabet order.
  const std::size_t a_count = table.alphabet.size();
  if (a_count > kMaxAlphabet) throw InvalidParameters("inner-product alphabet too large for a scheme check");
  std::map<std::int64_t, std::uint8_t> raw_index;
  {
    std::uint8_t k = 0;
    for (auto it = raw_to_ip.rbegin(); it != raw_to_ip.rend(); ++it) raw_index[it->first] = k++;
  }

  // cls[i*n+j] = alphabet index of <u_i, u_j>; bits[a][i] = indicator of {k : <u_i,u_k> = alpha_a}.
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint8_t> cls(n * n);
  std::vector<std::uint64_t> bits(a_count * n * words, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint8_t c = raw_index.at(raw_dot(ms[i], ms[j]));
      cls[i * n + j] = c;
      bits[(c * n + i) * words + j / 64] |= std::uint64_t{1} << (j % 64);
    }
  }
  auto row = [&](std::size_t a, std::size_t i) { return bits.data() + (a * n + i) * words; };

  const std::size_t chunks = std::min<std::size_t>(64, std::max<std::size_t>(n, 1));
  std::vector<SchemeChunk> parts(chunks);
  parallel_chunks(n, chunks, threads, [&](std::size_t c, std::size_t begin, std::size_t end) {
    SchemeChunk& part = parts[c];
    part.witness.assign(a_count, std::nullopt);
    part.table.assign(a_count, {});
    std::vector<std::uint64_t> counts(a_count * a_count);
    for (std::size_t i = begin; i < end && !part.violation; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t a = 0; a < a_count; ++a) {
          const std::uint64_t* ri = row(a, i);
          for (std::size_t b = 0; b < a_count; ++b) {
            const std::uint64_t* rj = row(b, j);
            std::uint64_t s = 0;
            for (std::size_t w = 0; w < words; ++w) s += static_cast<std::uint64_t>(std::popcount(ri[w] & rj[w]));
            counts[a * a_count + b] = s;
          }
        }
        const std::uint8_t g = cls[i * n + j];
        if (!part.witness[g]) {
          part.witness[g] = std::make_pair(i, j);
          part.table[g] = counts;
        } else if (part.table[g] != counts) {
          part.violation = "pairs " + pair_text(part.witness[g]->first, part.witness[g]->second) + " and " +
                           pair_text(i, j) + " at inner product " + to_string(table.alphabet[g]) +
                           " have different intersection counts";
          break;
        }
      }
    }
  });

  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> witness(a_count);
  std::vector<std::vector<std::uint64_t>> flat(a_count);
  for (const auto& part : parts) {
    if (part.witness.empty()) continue;
    if (part.violation) throw NotAScheme(*part.violation);
    for (std::size_t g = 0; g < a_count; ++g) {
      if (!part.witness[g]) continue;
      if (!witness[g]) {
        witness[g] = part.witness[g];
        flat[g] = part.table[g];
      } else if (flat[g] != part.table[g]) {
        throw NotAScheme("pairs " + pair_text(witness[g]->first, witness[g]->second) + " and " +
                         pair_text(part.witness[g]->first, part.witness[g]->second) + " at inner product " +
                         to_string(table.alphabet[g]) + " have different intersection counts");
      }
    }
  }
  table.values.assign(a_count, std::vector<std::vector<std::uint64_t>>(a_count, std::vector<std::uint64_t>(a_count, 0)));
  for (std::size_t g = 0; g < a_count; ++g) {
    if (!witness[g]) continue;
    for (std::size_t a = 0; a < a_count; ++a) {
      for (std::size_t b = 0; b < a_count; ++b) table.values[g][a][b] = flat[g][a * a_count + b];
    }
  }
  return table;
}

std::vector<std::size_t> OrbitSplit::sizes() const {
  std::vector<std::size_t> s;
  for (const auto& c : classes) s.push_back(c.size());
  return s;
}

OrbitSplit orbit_split_by_histogram(const DerivedCode& code) {
  const auto& ms = code.members();
  std::map<std::vector<std::pair<std::int64_t, std::uint64_t>>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    std::map<std::int64_t, std::uint64_t> h;
    for (std::size_t j = 0; j < ms.size(); ++j) {
      if (j != i) ++h[raw_dot(ms[i], ms[j])];
    }
    groups[{h.begin(), h.end()}].push_back(i);
  }
  OrbitSplit split;
  for (auto& [key, members] : groups) split.classes.push_back(std::move(members));
  std::stable_sort(split.classes.begin(), split.classes.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.front() < b.front();
  });
  return split;
}

}  // namespace leechcert
