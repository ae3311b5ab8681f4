#include "leechcert_cli/cli.hpp"

#include "leechcert/bounds.hpp"
#include "leechcert/codes.hpp"
#include "leechcert/errors.hpp"
#include "leechcert/report.hpp"
#include "leechcert/uniqueness.hpp"
#include "leechcert/vector_io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

namespace leechcert::cli {

namespace {

constexpr std::size_t kMinimalVectorCount = 196560;

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string construction_key() {
  std::string key = "leech-minimal-vectors;v1;scale=" + std::to_string(kScaleSquared) + ";golay=";
  for (F2Word w : golay_generators()) key += hex64(w) + ",";
  return key;
}

/** Sorted, unique, all of norm 4 and the right count; anything else means a stale or damaged cache. */
bool plausible_leech_file(const std::vector<ScaledVector>& vs) {
  if (vs.size() != kMinimalVectorCount) return false;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (raw_dot(vs[i], vs[i]) != 4 * kScaleSquared) return false;
    if (i > 0 && !(vs[i - 1] < vs[i])) return false;
  }
  return true;
}

struct Config {
  unsigned threads = 0;
  std::string format = "text";
  std::string cache_dir;
  bool timings = true;
};

std::string join(const std::vector<std::string>& parts, const char* sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

template <typename Map>
std::string map_text(const Map& m) {
  std::vector<std::string> parts;
  for (const auto& [k, v] : m) {
    std::ostringstream ss;
    ss << k << ":" << v;
    parts.push_back(ss.str());
  }
  return join(parts);
}

std::string spectrum_text(const Spectrum& s) {
  std::vector<std::string> parts;
  for (const auto& [k, v] : s) parts.push_back(to_string(k) + ":" + std::to_string(v));
  return join(parts);
}

const std::vector<std::size_t> kChainSizes{196560, 4600, 891, 336, 170};
const std::vector<std::string> kChainMaxInner{"1/2", "1/3", "1/4", "1/5", "1/6"};

DerivedCode code_from_file(const CodeFile& f) {
  if (f.anchors.empty()) return DerivedCode::root(f.members);
  return DerivedCode::from_chain(f.anchors, f.members);
}

CertificateReport cmd_golay() {
  CertificateReport r;
  r.subject = "extended binary Golay code";
  const BinaryCode g = build_golay();
  r.expect("golay.size", "golay-code", "4096", std::to_string(g.size()));
  r.expect("golay.weight-distribution", "golay-code", "0:1, 8:759, 12:2576, 16:759, 24:1",
           map_text(g.weight_distribution()));
  r.expect("golay.minimum-distance", "golay-code", "8", std::to_string(g.minimum_distance()));
  return r;
}

CertificateReport cmd_leech(const Config& cfg) {
  CertificateReport r;
  r.subject = "Leech lattice minimal vectors";
  const auto start = std::chrono::steady_clock::now();
  const auto vs = cached_leech_vectors(cfg.cache_dir);
  const auto built = std::chrono::steady_clock::now();
  r.timings.emplace_back("construction", std::chrono::duration<double>(built - start).count());
  r.expect("leech.count", "leech-minimal-vectors", "196560", std::to_string(vs.size()));
  std::map<std::string, std::size_t> shapes{{"4^2", 0}, {"2^8", 0}, {"3 1^23", 0}, {"other", 0}};
  for (const auto& v : vs) {
    switch (classify_shape(v)) {
      case LeechShape::kFourFour: ++shapes["4^2"]; break;
      case LeechShape::kOctad: ++shapes["2^8"]; break;
      case LeechShape::kOdd: ++shapes["3 1^23"]; break;
      default: ++shapes["other"];
    }
  }
  r.expect("leech.shapes", "leech-minimal-vectors", "1104, 97152, 98304, 0",
           std::to_string(shapes["4^2"]) + ", " + std::to_string(shapes["2^8"]) + ", " +
               std::to_string(shapes["3 1^23"]) + ", " + std::to_string(shapes["other"]));
  const MinimalPairScan scan = scan_minimal_pairs(vs, cfg.threads);
  r.timings.emplace_back("pair-scan", std::chrono::duration<double>(std::chrono::steady_clock::now() - built).count());
  r.expect("leech.norms", "leech-minimal-vectors", "all 4", scan.all_norm_four ? "all 4" : "other norm present");
  r.expect("leech.negation-closed", "leech-minimal-vectors", "ok", scan.negation_closed ? "ok" : "not closed");
  r.expect("leech.inner-products", "leech-minimal-vectors", "within {0,+-1,+-2,+-4}",
           scan.closure_ok ? "within {0,+-1,+-2,+-4}" : "other inner product present");
  // Every vector sees the same distance distribution, so pair counts are N/2 times it.
  const std::map<int, std::uint64_t> per_vector{{-4, 1}, {-2, 4600}, {-1, 47104}, {0, 93150},
                                                 {1, 47104}, {2, 4600}};
  std::vector<std::string> expected;
  for (const auto& [ip, c] : per_vector) expected.push_back(std::to_string(ip) + ":" + std::to_string(c * vs.size() / 2));
  std::vector<std::string> actual;
  for (const auto& [ip, c] : scan.histogram) actual.push_back(to_string(ip) + ":" + std::to_string(c));
  r.expect("leech.pair-histogram", "leech-minimal-vectors", join(expected), join(actual));
  return r;
}

CertificateReport cmd_chain(const Config& cfg, unsigned depth, const std::string& out_path) {
  if (depth >= kChainSizes.size()) throw InvalidParameters("chain depth must be at most 4");
  CertificateReport r;
  r.subject = "kissing chain, depth " + std::to_string(depth);
  const auto vs = cached_leech_vectors(cfg.cache_dir);
  DerivedCode code = DerivedCode::root(vs);
  for (unsigned d = 1; d <= depth; ++d) code = derive_kissing(code, code.members().front());
  const Spectrum s = spectrum(code, cfg.threads);
  r.expect("chain.size", "kissing-chain", std::to_string(kChainSizes[depth]), std::to_string(code.size()));
  r.expect("chain.dimension", "kissing-chain", std::to_string(24 - depth), std::to_string(code.dimension()));
  r.expect("chain.max-inner-product", "kissing-chain", kChainMaxInner[depth],
           s.empty() ? "none" : to_string(s.rbegin()->first));
  r.record("chain.spectrum", "kissing-chain", spectrum_text(s));
  if (depth == 4) {
    std::vector<std::string> sizes;
    for (auto n : orbit_split_by_histogram(code).sizes()) sizes.push_back(std::to_string(n));
    r.expect("chain.histogram-split", "kissing-chain", "10, 160", join(sizes));
  }
  if (!out_path.empty()) save_code_file(out_path, CodeFile{code.anchors(), code.members()});
  return r;
}

CertificateReport cmd_design(const Config& cfg, const std::string& input, unsigned max_k,
                             std::optional<unsigned> expect_strength) {
  CertificateReport r;
  r.subject = "design strength of " + input;
  const DerivedCode code = code_from_file(load_code_file(input));
  const Spectrum s = spectrum(code, cfg.threads);
  r.record("design.size", "design-strength", std::to_string(code.size()));
  r.record("design.dimension", "design-strength", std::to_string(code.dimension()));
  const auto sums = gegenbauer_pair_sums(s, code.size(), code.dimension(), max_k);
  for (std::size_t i = 0; i < sums.size(); ++i) {
    r.record("design.sum-k" + std::to_string(i + 1), "design-strength", to_string(sums[i]));
  }
  bool nonneg = true;
  for (const auto& v : sums) nonneg = nonneg && v >= 0;
  r.expect("design.sums-nonnegative", "design-strength", "ok", nonneg ? "ok" : "negative Gegenbauer sum");
  const unsigned t = design_strength(s, code.size(), code.dimension(), max_k);
  if (expect_strength) {
    r.expect("design.strength", "design-strength", std::to_string(*expect_strength), std::to_string(t));
  } else {
    r.record("design.strength", "design-strength", std::to_string(t) + (t == max_k ? " (at least)" : ""));
  }
  return r;
}

CertificateReport cmd_scheme(const Config& cfg, const std::string& input) {
  CertificateReport r;
  r.subject = "intersection numbers of " + input;
  const DerivedCode code = code_from_file(load_code_file(input));
  try {
    const IntersectionTable t = intersection_numbers(code, cfg.threads);
    r.expect("scheme.constancy", "intersection-numbers", "ok", "ok");
    for (std::size_t g = 0; g < t.alphabet.size(); ++g) {
      for (std::size_t a = 1; a < t.alphabet.size(); ++a) {
        for (std::size_t b = a; b < t.alphabet.size(); ++b) {
          r.record("scheme.P[" + to_string(t.alphabet[g]) + "](" + to_string(t.alphabet[a]) + "," +
                       to_string(t.alphabet[b]) + ")",
                   "intersection-numbers", std::to_string(t.values[g][a][b]));
        }
      }
    }
  } catch (const NotAScheme& e) {
    r.fail("scheme.constancy", "intersection-numbers", "ok", e.what());
  }
  return r;
}

CertificateReport cmd_lp_spherical(const std::string& poly, unsigned dim, const std::string& t_text, unsigned degree,
                                   const std::string& nodes_text) {
  CertificateReport r;
  const Rational t = parse_rational(t_text);
  SphericalCertificate c;
  if (!poly.empty()) {
    r.subject = "spherical LP certificate check";
    c = inspect_spherical_certificate(parse_polynomial(poly), dim, t);
  } else {
    r.subject = "spherical LP certificate search";
    std::vector<Rational> nodes;
    std::stringstream ss(nodes_text);
    for (std::string item; std::getline(ss, item, ',');) nodes.push_back(parse_rational(item));
    c = find_spherical_certificate(dim, t, degree, nodes);
  }
  r.record("lp.polynomial", "lp-bound", c.polynomial.to_string());
  r.expect("lp.valid", "lp-bound", "valid", c.valid ? "valid" : c.failure);
  r.record("lp.bound", "lp-bound", to_string(c.bound));
  std::vector<std::string> roots;
  for (const auto& x : c.equality_inner_products) roots.push_back(to_string(x));
  r.record("lp.equality-inner-products", "lp-bound", join(roots));
  r.record("lp.equality-design-strength", "lp-bound", std::to_string(c.equality_design_strength));
  return r;
}

CertificateReport cmd_lp_binary(unsigned n, unsigned dmin, unsigned dmax) {
  if (dmin < 1 || dmin > dmax || dmax > n) throw InvalidParameters("need 1 <= dmin <= dmax <= n");
  CertificateReport r;
  r.subject = "binary LP bound";
  std::set<unsigned> allowed;
  for (unsigned d = dmin; d <= dmax; ++d) allowed.insert(d);
  const BinaryLpBound b = binary_code_lp_bound(n, allowed);
  r.record("lp.optimum", "binary-lp-bound", to_string(b.optimum));
  r.record("lp.bound", "binary-lp-bound", b.bound.get_str());
  std::vector<std::string> dist;
  std::size_t i = 0;
  for (unsigned d : allowed) {
    if (b.distribution.at(i) != 0) dist.push_back(std::to_string(d) + ":" + to_string(b.distribution[i]));
    ++i;
  }
  r.record("lp.distance-distribution", "binary-lp-bound", join(dist));
  return r;
}

CertificateReport cmd_lp_cw(unsigned n, unsigned d, unsigned w) {
  CertificateReport r;
  r.subject = "constant-weight packing bound";
  r.record("cw.bound", "packing-bound", constant_weight_bound(n, d, w).get_str());
  return r;
}

CertificateReport cmd_unique(const Config& cfg, const std::string& which, bool extended, std::size_t seed) {
  Pipeline p;
  if (which == "891") {
    p = Pipeline::k891;
  } else if (which == "4600") {
    p = Pipeline::k4600;
  } else {
    throw InvalidParameters("pipeline must be 891 or 4600");
  }
  const auto start = std::chrono::steady_clock::now();
  const auto vs = cached_leech_vectors(cfg.cache_dir);
  const double load = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  UniquenessOptions o;
  o.seed = seed;
  o.threads = cfg.threads;
  o.leech = &vs;
  o.extended = extended;
  CertificateReport r = run_uniqueness(p, o);
  r.timings.insert(r.timings.begin(), {"minimal-vectors", load});
  return r;
}

void emit(const CertificateReport& r, const Config& cfg, std::ostream& out) {
  if (cfg.format == "json") {
    out << r.to_json(cfg.timings) << '\n';
  } else {
    out << r.to_text(cfg.timings);
  }
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::filesystem::path leech_cache_path(const std::filesystem::path& cache_dir) {
  return cache_dir / ("leech-" + hex64(fnv1a64(construction_key())) + ".vec");
}

std::vector<ScaledVector> cached_leech_vectors(const std::filesystem::path& cache_dir) {
  if (cache_dir.empty()) return leech_minimal_vectors();
  const auto path = leech_cache_path(cache_dir);
  if (std::filesystem::exists(path)) {
    try {
      auto vs = load_vector_set(path);
      if (plausible_leech_file(vs)) return vs;
    } catch (const ParseError&) {
      // Damaged file: rebuild below.
    }
  }
  auto vs = leech_minimal_vectors();
  std::error_code ec;
  std::filesystem::create_directories(cache_dir, ec);
  if (ec) throw IoError("cannot create cache directory " + cache_dir.string() + ": " + ec.message());
  const auto tmp = path.string() + ".tmp";
  save_vector_set(tmp, vs);
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot write " + path.string() + ": " + ec.message());
  return vs;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact certificates for the Leech-lattice kissing configurations", "leechcert"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--threads", cfg.threads, "Worker threads (default: hardware concurrency)")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--cache-dir", cfg.cache_dir, "Directory for cached minimal vectors");
  app.add_flag("!--no-timings", cfg.timings, "Omit stage timings from the output");

  auto* golay = app.add_subcommand("golay", "Build the Golay code and check its weight distribution");
  auto* leech = app.add_subcommand("leech", "Build the 196560 minimal vectors and scan all pairs");

  unsigned depth = 1;
  std::string chain_out;
  auto* chain = app.add_subcommand("chain", "Export a code of the kissing chain");
  chain->add_option("--depth", depth, "Chain depth: 0 = 196560, 1 = 4600, 2 = 891, 3 = 336, 4 = 170")
      ->check(CLI::Range(0, 4));
  chain->add_option("--out", chain_out, "Output code file");

  std::string input;
  unsigned max_k = 6;
  std::optional<unsigned> expect_strength;
  auto* design = app.add_subcommand("design-check", "Gegenbauer pair sums and design strength of a code file");
  design->add_option("--input", input, "Code file written by chain")->required();
  design->add_option("--max-k", max_k, "Highest degree checked")->check(CLI::Range(1, 30));
  design->add_option("--expect-strength", expect_strength, "Assert this design strength");

  std::string scheme_input;
  auto* scheme = app.add_subcommand("scheme", "Intersection numbers of a code file");
  scheme->add_option("--input", scheme_input, "Code file written by chain")->required();

  auto* lp = app.add_subcommand("lp", "Linear programming bounds");
  lp->require_subcommand(1);
  lp->fallthrough();
  std::string poly, t_text, nodes_text;
  unsigned dim = 0, degree = 7;
  auto* lp_sph = lp->add_subcommand("spherical", "Check or search a spherical LP certificate");
  lp_sph->add_option("--poly", poly, "Polynomial: coefficient list or factored form");
  lp_sph->add_option("--dim", dim, "Dimension n")->required()->check(CLI::Range(2, 1000));
  lp_sph->add_option("--t", t_text, "Maximal inner product p/q")->required();
  lp_sph->add_option("--degree", degree, "Search degree when --poly is absent")->check(CLI::Range(1, 10));
  lp_sph->add_option("--nodes", nodes_text, "Comma-separated equality nodes for the search");
  unsigned bn = 0, dmin = 0, dmax = 0;
  auto* lp_bin = lp->add_subcommand("binary", "Delsarte LP bound for binary codes");
  lp_bin->add_option("--n", bn, "Length")->required()->check(CLI::Range(1, 63));
  lp_bin->add_option("--dmin", dmin, "Smallest allowed distance")->required();
  lp_bin->add_option("--dmax", dmax, "Largest allowed distance")->required();
  unsigned cn = 0, cd = 0, cw = 0;
  auto* lp_cw = lp->add_subcommand("cw", "Packing bound for constant-weight codes");
  lp_cw->add_option("--n", cn, "Length")->required();
  lp_cw->add_option("--d", cd, "Minimum distance")->required();
  lp_cw->add_option("--w", cw, "Weight")->required();

  std::string which;
  bool extended = false;
  std::size_t seed = 0;
  auto* unique = app.add_subcommand("unique", "Run a uniqueness pipeline");
  unique->add_option("pipeline", which, "891 or 4600")->required()->check(CLI::IsMember({"891", "4600"}));
  unique->add_flag("--extended", extended, "Also check the 196560-point design strength (slow)");
  unique->add_option("--seed", seed, "Frame search seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kPass : kUsageError;
  }

  try {
    CertificateReport report;
    if (*golay) {
      report = cmd_golay();
    } else if (*leech) {
      report = cmd_leech(cfg);
    } else if (*chain) {
      report = cmd_chain(cfg, depth, chain_out);
    } else if (*design) {
      report = cmd_design(cfg, input, max_k, expect_strength);
    } else if (*scheme) {
      report = cmd_scheme(cfg, scheme_input);
    } else if (*lp_sph) {
      if (poly.empty() && nodes_text.empty()) throw InvalidParameters("lp spherical needs --poly or --nodes");
      report = cmd_lp_spherical(poly, dim, t_text, degree, nodes_text);
    } else if (*lp_bin) {
      report = cmd_lp_binary(bn, dmin, dmax);
    } else if (*lp_cw) {
      report = cmd_lp_cw(cn, cd, cw);
    } else {
      report = cmd_unique(cfg, which, extended, seed);
    }
    emit(report, cfg, out);
    return report.pass() ? kPass : kCheckFailure;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIoError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InvalidParameters& e) {
    err << "invalid parameters: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "check failed: " << e.what() << '\n';
    return kCheckFailure;
  }
}

}  // namespace leechcert::cli
