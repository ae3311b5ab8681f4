#include "leechcert/uniqueness.hpp"

#include "leechcert/bounds.hpp"
#include "leechcert/combinatorics.hpp"
#include "leechcert/errors.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>

namespace leechcert {

std::vector<Rational> pipeline_levels(Pipeline pipeline) {
  if (pipeline == Pipeline::k891) return {make_rational(1, 2), make_rational(1, 3)};
  return {make_rational(1, 2)};
}

ChainModel build_chain_model(Pipeline pipeline, std::span<const ScaledVector> leech) {
  const DerivedCode root = DerivedCode::root({leech.begin(), leech.end()});
  const DerivedCode c4600 = derive_kissing(root, root.members().front());
  if (pipeline == Pipeline::k4600) return {c4600.anchors(), c4600.members()};
  const DerivedCode c891 = derive_kissing(c4600, c4600.members().front());
  return {c891.anchors(), c891.members()};
}

HermiteForm leech_hermite_form(std::span<const ScaledVector> leech) {
  std::vector<IntVector> gens;
  gens.reserve(leech.size());
  for (const auto& v : leech) gens.push_back(to_int_vector(v));
  return hermite_normal_form(gens);
}

IndexResult index_in_leech(Pipeline pipeline, std::span<const ScaledVector> anchors,
                           std::span<const ScaledVector> members, std::span<const ScaledVector> leech,
                           const HermiteForm& leech_form) {
  IndexResult r;
  if (leech_form.determinant) r.leech_determinant = *leech_form.determinant;
  std::vector<IntVector> gens;
  for (const auto& a : anchors) gens.push_back(to_int_vector(a));
  for (const auto& m : members) gens.push_back(to_int_vector(m));
  const HermiteForm l = hermite_normal_form(gens, leech_form);
  r.contained = l.contained_in_ambient;
  r.index = l.index;
  if (pipeline == Pipeline::k4600 && !anchors.empty()) {
    const ScaledVector& v0 = anchors.front();
    r.generators_even_with_v0 = true;
    for (const auto& a : anchors) {
      if (raw_dot(a, v0) % (2 * kScaleSquared) != 0) r.generators_even_with_v0 = false;
    }
    for (const auto& m : members) {
      if (raw_dot(m, v0) % (2 * kScaleSquared) != 0) r.generators_even_with_v0 = false;
    }
    for (const auto& v : leech) {
      const std::int64_t d = raw_dot(v, v0);
      if (d % kScaleSquared == 0 && (d / kScaleSquared) % 2 != 0) {
        r.odd_witness = v;
        break;
      }
    }
    if (r.odd_witness) r.witness_outside_L = !lattice_contains(l, to_int_vector(*r.odd_witness));
  }
  return r;
}

std::vector<IntersectionEntry> expected_intersection_numbers_891() {
  const Rational one = 1, a = make_rational(1, 4), b = make_rational(-1, 8), c = make_rational(-1, 2);
  return {
      {one, a, a, 336}, {one, b, b, 512}, {one, c, c, 42},
      {a, a, a, 170},   {a, b, b, 320},   {a, c, c, 5},
      {a, a, b, 160},   {a, a, c, 5},     {a, b, c, 32},
      {b, a, a, 105},   {b, b, b, 280},   {b, c, c, 0},
      {b, a, b, 210},   {b, a, c, 21},    {b, b, c, 21},
      {c, a, a, 40},    {c, b, b, 256},   {c, c, c, 1},
      {c, a, b, 256},   {c, a, c, 40},    {c, b, c, 0},
  };
}

namespace {

using Clock = std::chrono::steady_clock;

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + parts[i];
  return s;
}

std::string join(const std::vector<Rational>& values) {
  std::vector<std::string> parts;
  for (const auto& v : values) parts.push_back(to_string(v));
  return join(parts);
}

template <typename T>
std::string str(const T& v) {
  std::ostringstream ss;
  ss << v;
  return ss.str();
}

std::string coords_text(const FrameCoords& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

std::string vector_text(const ScaledVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < kLeechDim; ++i) s += (i ? "," : "") + std::to_string(v.coords[i]);
  return s + ")";
}

struct Runner {
  CertificateReport& report;

  /** Runs one stage; an exception becomes a failed check instead of aborting the pipeline. */
  void stage(const std::string& name, const std::string& anchor, const std::function<void()>& body) {
    const auto start = Clock::now();
    try {
      body();
    } catch (const std::exception& e) {
      report.fail(name + ".completes", anchor, "completes", e.what());
    }
    report.timings.emplace_back(name, std::chrono::duration<double>(Clock::now() - start).count());
  }
};

template <typename T>
const T& need(const std::optional<T>& v, const char* what) {
  if (!v) throw Error(std::string("prerequisite unavailable: ") + what);
  return *v;
}

}  // namespace

CertificateReport run_uniqueness(Pipeline pipeline, const UniquenessOptions& options) {
  const auto start = Clock::now();
  std::vector<ScaledVector> local;
  const std::vector<ScaledVector>* leech = options.leech;
  if (!leech) {
    local = leech_minimal_vectors();
    leech = &local;
  }
  const ChainModel model = build_chain_model(pipeline, *leech);
  const double construction = std::chrono::duration<double>(Clock::now() - start).count();
  UniquenessOptions inner = options;
  inner.leech = leech;
  CertificateReport report = run_uniqueness_on(pipeline, model, inner);
  report.timings.insert(report.timings.begin(), {"construction", construction});
  return report;
}

CertificateReport run_uniqueness_on(Pipeline pipeline, const ChainModel& model, const UniquenessOptions& options) {
  const bool is891 = pipeline == Pipeline::k891;
  const unsigned dim = is891 ? 22 : 23;
  const std::size_t size = is891 ? 891 : 4600;
  const std::string n_text = std::to_string(size);

  CertificateReport report;
  report.subject = is891 ? "uniqueness certificate: (22, 891, 1/4) spherical code"
                         : "uniqueness certificate: (23, 4600, 1/3) spherical code";
  report.metadata = {{"pipeline", to_string(pipeline)},
                     {"seed", std::to_string(options.seed)},
                     {"extended", options.extended ? "true" : "false"}};
  Runner run{report};

  std::vector<ScaledVector> local_leech;
  const std::vector<ScaledVector>* leech = options.leech;
  run.stage("leech", "leech-minimal-vectors", [&] {
    if (!leech) {
      local_leech = leech_minimal_vectors();
      leech = &local_leech;
    }
    report.expect("leech.minimal-vector-count", "leech-minimal-vectors", "196560", std::to_string(leech->size()));
  });

  std::vector<ScaledVector> members = model.members;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  const std::vector<ScaledVector>& anchors = model.anchors;
  std::optional<ScaledVector> v1;
  if (is891 && anchors.size() > 1) v1 = anchors[1];

  std::optional<DerivedCode> code;
  run.stage("chain", "kissing-chain", [&] {
    report.expect("chain.anchor-count", "kissing-chain", is891 ? "2" : "1", std::to_string(anchors.size()));
    code.emplace(anchors, members, pipeline_levels(pipeline));
    report.expect("chain.size", "kissing-chain", n_text, std::to_string(code->size()));
    report.expect("chain.level-parameters", "kissing-chain", is891 ? "1/2, 1/3" : "1/2", join(code->level_params()));
    const auto problem = code->validate();
    report.expect("chain.consistency", "kissing-chain", "ok", problem ? *problem : "ok");
  });

  std::optional<Spectrum> spec;
  run.stage("spectrum", "inner-product-spectrum", [&] {
    spec = spectrum(need(code, "code"), options.threads);
    std::vector<Rational> support;
    for (const auto& [ip, c] : *spec) support.push_back(ip);
    report.expect("spectrum.support", "inner-product-spectrum", is891 ? "-1/2, -1/8, 1/4" : "-1, -1/3, 0, 1/3",
                  join(support));
    report.expect("spectrum.max-inner-product", "inner-product-spectrum", is891 ? "1/4" : "1/3",
                  support.empty() ? "none" : to_string(support.back()));
  });

  std::optional<unsigned> strength;
  run.stage("design", "design-strength", [&] {
    const unsigned k_max = is891 ? 6 : 8;
    const auto sums = gegenbauer_pair_sums(need(spec, "spectrum"), need(code, "code").size(), dim, k_max);
    unsigned t = 0;
    while (t < sums.size() && sums[t] == 0) ++t;
    strength = t;
    report.expect("design.strength", "design-strength", is891 ? "5" : "7", std::to_string(t));
    const std::string next = std::to_string(k_max);
    report.expect_that("design.sum-k" + next + "-nonzero", "design-strength", "nonzero", to_string(sums.back()),
                       sums.back() != 0);
    const bool nonneg = std::all_of(sums.begin(), sums.end(), [](const Rational& s) { return s >= 0; });
    report.expect("design.sums-nonnegative", "design-strength", "ok", nonneg ? "ok" : "negative Gegenbauer sum");
  });

  if (is891) {
    run.stage("distribution", "norm-two-contradiction", [&] {
      const std::vector<Rational> alphas{0, make_rational(3, 8), make_rational(-3, 8), make_rational(3, 4),
                                         make_rational(-3, 4)};
      const auto d = solve_distribution(size, dim, make_rational(3, 4), alphas, 5);
      std::vector<Rational> counts;
      for (const auto& [a, c] : d.counts) counts.push_back(c);
      report.expect("distribution.norm3-neighbors", "norm-two-contradiction", "657, 120, 120, -3, -3", join(counts));
      const bool negative = std::any_of(counts.begin(), counts.end(), [](const Rational& c) { return c < 0; });
      report.expect("distribution.contradiction", "norm-two-contradiction", "negative count",
                    negative ? "negative count" : "all counts nonnegative");
    });
    run.stage("valencies", "scheme-valencies", [&] {
      const std::vector<Rational> alphas{1, make_rational(1, 4), make_rational(-1, 8), make_rational(-1, 2)};
      const auto d = solve_distribution(size, dim, 1, alphas, need(strength, "design strength"));
      std::vector<Rational> solved;
      for (const auto& [a, c] : d.counts) solved.push_back(c);
      report.expect("valencies.solved", "scheme-valencies", "1, 336, 512, 42", join(solved));
      std::vector<Rational> empirical{1};
      for (std::size_t i = 1; i < alphas.size(); ++i) {
        auto it = need(spec, "spectrum").find(alphas[i]);
        const std::uint64_t c = it == spec->end() ? 0 : it->second;
        empirical.push_back(make_rational(static_cast<std::int64_t>(2 * c), static_cast<std::int64_t>(size)));
      }
      report.expect("valencies.empirical", "scheme-valencies", join(solved), join(empirical));
    });
    run.stage("scheme", "intersection-numbers", [&] {
      const IntersectionTable table = intersection_numbers(need(code, "code"), options.threads);
      report.expect("scheme.constancy", "intersection-numbers", "ok", "ok");
      report.expect("scheme.alphabet", "intersection-numbers", "1, 1/4, -1/8, -1/2", join(table.alphabet));
      for (const auto& e : expected_intersection_numbers_891()) {
        const std::string name = "scheme.P[" + to_string(e.gamma) + "](" + to_string(e.alpha) + "," + to_string(e.beta) + ")";
        report.expect(name, "intersection-numbers", std::to_string(e.value),
                      std::to_string(table.at(e.gamma, e.alpha, e.beta)));
      }
      bool sym = true, kronecker = true, rows = true;
      const std::size_t a = table.alphabet.size();
      for (std::size_t g = 0; g < a; ++g) {
        for (std::size_t x = 0; x < a; ++x) {
          std::uint64_t row = 0;
          for (std::size_t y = 0; y < a; ++y) {
            if (table.values[g][x][y] != table.values[g][y][x]) sym = false;
            row += table.values[g][x][y];
          }
          if (table.values[g][x][0] != (x == g ? 1U : 0U)) kronecker = false;
          if (row != table.values[0][x][x]) rows = false;
        }
      }
      report.expect("scheme.symmetry", "intersection-numbers", "ok", sym ? "ok" : "asymmetric");
      report.expect("scheme.kronecker", "intersection-numbers", "ok", kronecker ? "ok" : "violated");
      report.expect("scheme.valency-row-sums", "intersection-numbers", "ok", rows ? "ok" : "violated");
    });
  }

  run.stage("lp", "lp-bound", [&] {
    SphericalCertificate cert;
    if (is891) {
      cert = inspect_spherical_certificate(parse_polynomial("(x+1/2)^2*(x+1/8)^2*(x-1/4)"), dim, make_rational(1, 4));
    } else {
      const std::vector<Rational> nodes{-1, make_rational(-1, 3), 0, make_rational(1, 3)};
      cert = find_spherical_certificate(dim, make_rational(1, 3), 7, nodes);
      report.record("lp.polynomial", "lp-bound", cert.polynomial.to_string());
    }
    report.expect("lp.valid", "lp-bound", "valid", cert.valid ? "valid" : cert.failure);
    report.expect("lp.bound", "lp-bound", n_text, to_string(cert.bound));
    report.expect("lp.bound-attained", "lp-bound", to_string(cert.bound),
                  code ? std::to_string(code->size()) : "unavailable");
    const auto& s = need(spec, "spectrum");
    bool within = true;
    for (const auto& [ip, c] : s) {
      if (std::find(cert.equality_inner_products.begin(), cert.equality_inner_products.end(), ip) ==
          cert.equality_inner_products.end()) {
        within = false;
      }
    }
    report.expect("lp.equality-inner-products", "lp-bound", "spectrum within roots",
                  within ? "spectrum within roots" : "inner product outside the root set");
    report.expect_that("lp.equality-design", "lp-bound", ">= " + std::to_string(cert.equality_design_strength),
                       strength ? std::to_string(*strength) : "unavailable",
                       strength && *strength >= cert.equality_design_strength);
  });

  run.stage("lattice", "even-lattice", [&] {
    const AssembledLattice l = assemble_L(members, anchors);
    report.expect("lattice.even-integral", "even-lattice", "ok", "ok");
    std::vector<std::string> pairs;
    for (auto it = l.translation.rbegin(); it != l.translation.rend(); ++it) {
      pairs.push_back(to_string(it->first) + " -> " + to_string(it->second));
    }
    report.expect("lattice.translation", "even-lattice",
                  is891 ? "1 -> 4, 1/4 -> 2, -1/8 -> 1, -1/2 -> 0" : "1 -> 4, 1/3 -> 2, 0 -> 1, -1/3 -> 0, -1 -> -2",
                  join(pairs));
    report.expect("lattice.ip-closure", "minimal-inner-products", "ok",
                  minimal_ip_closure_check(members, anchors) ? "ok" : "inner product outside {0,+-1,+-2,+-4}");
  });

  std::optional<D24Frame> frame;
  run.stage("frame", "d24-sublattice", [&] {
    frame = find_d24_frame(members, anchors, options.seed);
    report.expect("frame.extension-steps", "d24-sublattice", "21", std::to_string(frame->pool_sizes.size()));
    const std::size_t min_pool = *std::min_element(frame->pool_sizes.begin(), frame->pool_sizes.end());
    report.expect_that("frame.min-pool-size", "d24-sublattice", ">= 43", std::to_string(min_pool), min_pool >= 43);
    if (is891) {
      report.expect("frame.orthogonal-member", "d24-sublattice", "1", std::to_string(frame->orthogonal_pair_members));
    }
    const auto problem = check_frame(*frame);
    report.expect("frame.gram", "d24-sublattice", "ok", problem ? *problem : "ok");
    bool contains = true;
    for (const auto& a : anchors) contains = contains && in_sqrt2_dn(a, *frame, kLeechDim);
    report.expect("frame.contains-anchors", "d24-sublattice", "ok", contains ? "ok" : "anchor outside sqrt(2)D24");
  });

  std::optional<D24Frame> normal;
  run.stage("normalize", "standard-coordinates", [&] {
    normal = normalize_frame(need(frame, "frame"), anchors.at(0), v1, members, pipeline);
    FrameCoords v0w{};
    v0w[0] = v0w[1] = 4;
    report.expect("normalize.V0", "standard-coordinates", coords_text(v0w), coords_text(coordinates_in_frame(anchors[0], *normal)));
    if (v1) {
      FrameCoords v1w{};
      v1w[0] = v1w[2] = 4;
      report.expect("normalize.V1", "standard-coordinates", coords_text(v1w), coords_text(coordinates_in_frame(*v1, *normal)));
    }
    FrameCoords w0{};
    w0.fill(-1);
    w0[0] = 3;
    w0[1] = 1;
    if (is891) w0[2] = 1;
    report.expect("normalize.W0", "standard-coordinates", coords_text(w0), coords_text(coordinates_in_frame(*normal->w0, *normal)));
  });

  std::optional<CaseSplit> split;
  run.stage("cases", "case-analysis", [&] {
    split = classify_cases(members, need(normal, "normalized frame"), pipeline);
    const std::vector<CaseLabel> labels = is891
        ? std::vector<CaseLabel>{CaseLabel::kI, CaseLabel::kII, CaseLabel::kIII, CaseLabel::kIV}
        : std::vector<CaseLabel>{CaseLabel::kI, CaseLabel::kII, CaseLabel::kIII, CaseLabel::kIV, CaseLabel::kV};
    std::vector<std::string> sizes;
    std::size_t total = 0;
    for (auto l : labels) {
      sizes.push_back(std::to_string(split->count(l)));
      total += split->count(l);
    }
    report.expect("cases.sizes", "case-analysis", is891 ? "42, 1, 336, 512" : "44, 44, 2464, 1024, 1024", join(sizes));
    report.expect("cases.total", "case-analysis", n_text, std::to_string(total));
    report.expect("cases.partition", "case-analysis", std::to_string(members.size()), std::to_string(total));

    // Upper bounds per case from the packing and LP bounds; their sum must equal the code size.
    const unsigned tail = split->tail_length();
    const BigInt cw = is891 ? constant_weight_bound(21, 8, 5) : constant_weight_bound(22, 8, 6);
    std::set<unsigned> allowed;
    for (unsigned d = 8; d <= (is891 ? 16U : 22U); ++d) allowed.insert(d);
    const BinaryLpBound lp = binary_code_lp_bound(tail, allowed);
    std::vector<BigInt> caps;
    if (is891) {
      caps = {BigInt(2 * tail), BigInt(1), BigInt(16) * cw, lp.bound};
    } else {
      caps = {BigInt(2 * tail), BigInt(2 * tail), BigInt(32) * cw, lp.bound, lp.bound};
    }
    BigInt cap_total = 0;
    std::vector<std::string> cap_text;
    bool tight = true;
    for (std::size_t i = 0; i < caps.size(); ++i) {
      cap_total += caps[i];
      cap_text.push_back(caps[i].get_str());
      if (BigInt(static_cast<unsigned long>(split->count(labels[i]))) != caps[i]) tight = false;
    }
    report.expect("cases.upper-bounds", "case-analysis", is891 ? "42, 1, 336, 512" : "44, 44, 2464, 1024, 1024",
                  join(cap_text));
    report.expect("cases.upper-bound-total", "case-analysis", n_text, cap_total.get_str());
    report.expect("cases.bounds-tight", "case-analysis", "ok", tight ? "ok" : "some case below its bound");
    report.expect("bounds.constant-weight", "packing-bound", is891 ? "21" : "77", cw.get_str());
    report.expect("bounds.binary-lp", "binary-lp-bound", is891 ? "512" : "1024", lp.bound.get_str());
    if (!is891) {
      report.annotations.push_back(
          "Cases I and II have 44 members each: the tail entry 4 may carry either sign in any of 22 positions, "
          "and only 44 + 44 + 2464 + 1024 + 1024 reaches 4600 (22 each would give 4556).");
    }
  });

  run.stage("codes", "extracted-codes", [&] {
    const CaseSplit& s = need(split, "case split");
    const unsigned tail = s.tail_length();
    const BinaryCode d(tail, s.d_code);
    const SteinerCheck st = is891 ? verify_steiner(d, 2, 5, 21) : verify_steiner(d, 3, 6, 22);
    report.expect("codes.D-steiner", "steiner-system", is891 ? "S(2,5,21)" : "S(3,6,22)",
                  st.ok ? (is891 ? "S(2,5,21)" : "S(3,6,22)") : st.reason);
    report.expect("codes.D-size", "steiner-system", is891 ? "21" : "77", std::to_string(d.size()));
    report.expect("codes.D-rank", "steiner-system", is891 ? "10" : "11",
                  std::to_string(f2_rank(F2Matrix(tail, s.d_code))));
    const auto dp = distance_profile(d);
    report.expect("codes.D-min-distance", "steiner-system", "8", dp.empty() ? "none" : std::to_string(dp.begin()->first));
    const BinaryCode e(tail, s.e_code);
    report.expect("codes.E-size", "case-iv-code", is891 ? "512" : "1024", std::to_string(e.size()));
    const auto ep = distance_profile(e);
    const int lo = ep.empty() ? 0 : ep.begin()->first;
    const int hi = ep.empty() ? 0 : ep.rbegin()->first;
    const int cap = is891 ? 16 : 22;
    report.expect_that("codes.E-distances", "case-iv-code", "within 8.." + std::to_string(cap),
                       std::to_string(lo) + ".." + std::to_string(hi), !ep.empty() && lo >= 8 && hi <= cap);
  });

  run.stage("parity", "sign-parity", [&] {
    const CaseSplit& s = need(split, "case split");
    const FrameCoords w0 = coordinates_in_frame(*need(normal, "normalized frame").w0, *normal);
    const ParityResult p = parity_check(s, w0);
    report.expect("parity.case-III", "sign-parity", is891 ? "even" : "odd", is891 ? "even" : "odd");
    report.expect("parity.vectors", "sign-parity", is891 ? "336" : "2464", std::to_string(p.vectors));
    report.expect("parity.codewords", "sign-parity", is891 ? "21" : "77", std::to_string(p.codewords));
    const std::string pat = p.min_patterns == p.max_patterns
                                ? std::to_string(p.min_patterns)
                                : std::to_string(p.min_patterns) + ".." + std::to_string(p.max_patterns);
    report.expect("parity.patterns-per-codeword", "sign-parity", is891 ? "16" : "32", pat);
  });

  run.stage("generation", "span-generation", [&] {
    const GenerationResult g = generation_check(need(split, "case split"));
    report.expect("generation.span-count", "span-generation", is891 ? "512" : "1024", std::to_string(g.span_count));
    report.expect("generation.case-IV-count", "span-generation", std::to_string(g.span_count),
                  std::to_string(g.case_iv_count));
    report.expect("generation.case-IV-equals-span", "span-generation", "ok", g.sets_equal ? "ok" : "sets differ");
    report.expect("generation.weights-divisible-by-4", "span-generation", "ok",
                  g.weights_divisible_by_4 ? "ok" : "weight not divisible by 4");
    const Rational min_norm = make_rational(g.min_difference_raw_norm, kScaleSquared);
    report.expect_that("generation.min-difference-norm", "span-generation", ">= 4", to_string(min_norm),
                       g.min_difference_raw_norm >= 0 && min_norm >= 4);
    if (g.case_v_is_v0_minus_case_iv) {
      report.expect("generation.case-V", "span-generation", "V0 - Case IV",
                    *g.case_v_is_v0_minus_case_iv ? "V0 - Case IV" : "sets differ");
    }
  });

  run.stage("index", "index-in-leech", [&] {
    if (!leech) throw Error("prerequisite unavailable: minimal vectors");
    const HermiteForm lf = leech_hermite_form(*leech);
    const IndexResult ir = index_in_leech(pipeline, anchors, members, *leech, lf);
    // Unimodular in true scale means covolume sqrt(8)^24 = 8^12 in the scaled coordinates.
    report.expect("index.leech-determinant", "index-in-leech", "68719476736", ir.leech_determinant.get_str());
    report.expect("index.contained", "index-in-leech", "ok", ir.contained ? "ok" : "generator outside the Leech lattice");
    const std::string idx = ir.index ? ir.index->get_str() : "undefined";
    if (is891) {
      report.record("index.value", "index-in-leech", idx);
    } else {
      report.expect("index.value", "index-in-leech", "2", idx);
      report.expect("index.even-with-V0", "index-in-leech", "ok", ir.generators_even_with_v0 ? "ok" : "odd inner product");
      report.expect("index.odd-witness", "index-in-leech", "found", ir.odd_witness ? "found" : "none");
      report.expect("index.witness-outside-L", "index-in-leech", "ok", ir.witness_outside_L ? "ok" : "witness lies in L");
      if (ir.odd_witness) {
        report.annotations.push_back("odd-inner-product witness: " + vector_text(*ir.odd_witness) + " / sqrt(8)");
      }
    }
  });

  if (options.extended) {
    run.stage("extended", "leech-design-strength", [&] {
      if (!leech) throw Error("prerequisite unavailable: minimal vectors");
      const unsigned t = design_strength(DerivedCode::root(*leech), 12, options.threads);
      report.expect("extended.leech-design-strength", "leech-design-strength", "11", std::to_string(t));
    });
  }

  return report;
}

}  // namespace leechcert
