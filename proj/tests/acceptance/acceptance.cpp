#include "leechcert/bounds.hpp"
#include "leechcert/codes.hpp"
#include "leechcert/leech.hpp"
#include "leechcert/polynomial.hpp"
#include "leechcert/simplex.hpp"
#include "leechcert/uniqueness.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

using namespace leechcert;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void need(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + parts[i];
  return s;
}

const Check* find(const CertificateReport& r, const std::string& name) {
  auto it = std::find_if(r.checks.begin(), r.checks.end(), [&](const Check& c) { return c.name == name; });
  return it == r.checks.end() ? nullptr : &*it;
}

bool check_is(const CertificateReport& r, const std::string& name, const std::string& actual) {
  const Check* c = find(r, name);
  return c && c->pass && c->actual == actual;
}

bool check_passes(const CertificateReport& r, const std::string& name) {
  const Check* c = find(r, name);
  return c && c->pass;
}

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= limit_seconds) o.need(false, "runtime limit exceeded");
  if (!o.ok) ++failures;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s / limit %.0f s", secs, limit_seconds);
  std::cout << "criterion " << id << ": " << (o.ok ? "PASS" : "FAIL") << " - " << title << " (" << timing << ")";
  if (!o.detail.empty()) std::cout << " [" << o.detail << "]";
  std::cout << std::endl;
}

std::vector<ScaledVector> g_leech;
std::optional<MinimalPairScan> g_scan;

}  // namespace

int main() {
  criterion(1, "minimal vectors: count, shapes, norms, pairwise inner products", 10, [] {
    Outcome o;
    g_leech = leech_minimal_vectors();
    o.need(g_leech.size() == 196560, "count " + std::to_string(g_leech.size()));
    std::size_t s44 = 0, s28 = 0, s31 = 0;
    for (const auto& v : g_leech) {
      switch (classify_shape(v)) {
        case LeechShape::kFourFour: ++s44; break;
        case LeechShape::kOctad: ++s28; break;
        case LeechShape::kOdd: ++s31; break;
        default: break;
      }
    }
    o.need(s44 == 1104 && s28 == 97152 && s31 == 98304, "shape counts");
    g_scan = scan_minimal_pairs(g_leech);
    o.need(g_scan->all_norm_four, "norms");
    o.need(g_scan->closure_ok, "inner products outside {0,+-1,+-2,+-4}");
    return o;
  });

  criterion(2, "kissing chain 4600 -> 891 -> 336 -> 170, spectra and split", 60, [] {
    Outcome o;
    DerivedCode code = DerivedCode::root(g_leech.empty() ? leech_minimal_vectors() : g_leech);
    const std::vector<std::size_t> sizes{4600, 891, 336, 170};
    const std::vector<Rational> maxima{make_rational(1, 3), make_rational(1, 4), make_rational(1, 5),
                                       make_rational(1, 6)};
    for (std::size_t d = 0; d < sizes.size(); ++d) {
      code = derive_kissing(code, code.members().front());
      const Spectrum s = spectrum(code);
      o.need(code.size() == sizes[d], "size at depth " + std::to_string(d + 1));
      o.need(!s.empty() && s.rbegin()->first == maxima[d], "max inner product at depth " + std::to_string(d + 1));
      if (sizes[d] == 891) {
        std::set<Rational> support;
        for (const auto& [ip, c] : s) support.insert(ip);
        o.need(support == std::set<Rational>{make_rational(1, 4), make_rational(-1, 8), make_rational(-1, 2)},
               "891 spectrum");
      }
    }
    const auto split = orbit_split_by_histogram(code).sizes();
    o.need(split == std::vector<std::size_t>{10, 160}, "170 split");
    return o;
  });

  criterion(3, "design strengths 5 (891), 7 (4600), 11 (196560, global histogram)", 5 + 180, [] {
    Outcome o;
    const ChainModel m891 = build_chain_model(Pipeline::k891, g_leech);
    const ChainModel m4600 = build_chain_model(Pipeline::k4600, g_leech);
    auto timed = [](const std::function<std::vector<Rational>()>& f, double& secs) {
      const auto start = std::chrono::steady_clock::now();
      auto r = f();
      secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return r;
    };
    double t891 = 0, t4600 = 0, t_ext = 0;
    const DerivedCode c891(m891.anchors, m891.members, pipeline_levels(Pipeline::k891));
    const DerivedCode c4600(m4600.anchors, m4600.members, pipeline_levels(Pipeline::k4600));
    const auto s891 = timed([&] { return gegenbauer_pair_sums(spectrum(c891), 891, 22, 6); }, t891);
    const auto s4600 = timed([&] { return gegenbauer_pair_sums(spectrum(c4600), 4600, 23, 8); }, t4600);
    auto first_nonzero = [](const std::vector<Rational>& s) {
      unsigned t = 0;
      while (t < s.size() && s[t] == 0) ++t;
      return t;
    };
    o.need(first_nonzero(s891) == 5 && s891.size() == 6 && s891[5] != 0, "891 strength");
    o.need(first_nonzero(s4600) == 7 && s4600.size() == 8 && s4600[7] != 0, "4600 strength");
    o.need(t891 < 5, "891 runtime");
    o.need(t4600 < 180, "4600 runtime");
    // The global scan of criterion 1 gives unordered pairs keyed by inner product; project by |x|^2 = 4.
    const auto s196560 = timed(
        [&] {
          Spectrum spec;
          for (const auto& [ip, c] : g_scan.value().histogram) spec[ip / 4] = c;
          return gegenbauer_pair_sums(spec, 196560, 24, 12);
        },
        t_ext);
    o.need(first_nonzero(s196560) == 11 && s196560[11] != 0, "196560 strength");
    std::ostringstream d;
    d.precision(3);
    d << "891 " << t891 << " s, 4600 " << t4600 << " s, 196560 sums " << t_ext << " s after the criterion 1 scan";
    if (o.ok) o.detail = d.str();
    return o;
  });

  criterion(4, "intersection numbers of the 891 code, with constancy", 600, [] {
    Outcome o;
    const ChainModel m = build_chain_model(Pipeline::k891, g_leech);
    const DerivedCode code(m.anchors, m.members, pipeline_levels(Pipeline::k891));
    const IntersectionTable t = intersection_numbers(code);
    int matched = 0;
    for (const auto& e : expected_intersection_numbers_891()) {
      const auto v = t.at(e.gamma, e.alpha, e.beta);
      if (v == e.value) {
        ++matched;
      } else {
        o.need(false, "P[" + to_string(e.gamma) + "](" + to_string(e.alpha) + "," + to_string(e.beta) +
                          ") = " + std::to_string(v));
      }
    }
    o.need(matched == 21, std::to_string(matched) + "/21 values");
    return o;
  });

  criterion(5, "norm-3 distribution solve gives (657, 120, 120, -3, -3)", 10, [] {
    Outcome o;
    const auto d = solve_distribution(891, 22, make_rational(3, 4),
                                      {0, make_rational(3, 8), make_rational(-3, 8), make_rational(3, 4),
                                       make_rational(-3, 4)},
                                      5);
    std::vector<std::string> counts;
    for (const auto& [a, c] : d.counts) counts.push_back(to_string(c));
    o.need(join(counts) == "657, 120, 120, -3, -3", join(counts));
    return o;
  });

  criterion(6, "LP certificates: 891 in dimension 22, 4600 in dimension 23", 10, [] {
    Outcome o;
    const auto c891 = inspect_spherical_certificate(parse_polynomial("(x+1/2)^2*(x+1/8)^2*(x-1/4)"), 22,
                                                    make_rational(1, 4));
    o.need(c891.valid && c891.bound == 891, "891 certificate: " + to_string(c891.bound) + " " + c891.failure);
    const auto c4600 =
        find_spherical_certificate(23, make_rational(1, 3), 7, {-1, make_rational(-1, 3), 0, make_rational(1, 3)});
    o.need(c4600.valid && c4600.bound == 4600, "4600 certificate: " + to_string(c4600.bound));
    return o;
  });

  criterion(7, "binary bounds 21, 77, 512, 1024", 30, [] {
    Outcome o;
    o.need(constant_weight_bound(21, 8, 5) == 21, "cw(21,8,5)");
    o.need(constant_weight_bound(22, 8, 6) == 77, "cw(22,8,6)");
    std::set<unsigned> a, b;
    for (unsigned d = 8; d <= 16; ++d) a.insert(d);
    for (unsigned d = 8; d <= 22; ++d) b.insert(d);
    o.need(binary_code_lp_bound(21, a).bound == 512, "LP(21)");
    o.need(binary_code_lp_bound(22, b).bound == 1024, "LP(22)");
    return o;
  });

  criterion(8, "891 uniqueness pipeline", 300, [] {
    Outcome o;
    const CertificateReport r = run_uniqueness(Pipeline::k891, {});
    o.need(r.pass(), "report fails");
    o.need(check_passes(r, "lattice.even-integral"), "even integral lattice");
    o.need(check_passes(r, "frame.min-pool-size") && check_passes(r, "frame.gram"), "D24 frame, pool >= 43");
    o.need(check_is(r, "cases.sizes", "42, 1, 336, 512"), "case sizes");
    o.need(check_is(r, "codes.D-steiner", "S(2,5,21)") && check_is(r, "codes.D-rank", "10"), "Steiner system");
    o.need(check_is(r, "parity.case-III", "even"), "parities");
    o.need(check_is(r, "generation.span-count", "512") && check_is(r, "generation.case-IV-count", "512") &&
               check_passes(r, "generation.case-IV-equals-span"),
           "span count");
    return o;
  });

  criterion(9, "4600 uniqueness pipeline", 300, [] {
    Outcome o;
    const CertificateReport r = run_uniqueness(Pipeline::k4600, {});
    o.need(r.pass(), "report fails");
    o.need(check_is(r, "cases.sizes", "44, 44, 2464, 1024, 1024") && check_is(r, "cases.total", "4600"),
           "case sizes");
    const bool flagged = std::any_of(r.annotations.begin(), r.annotations.end(),
                                     [](const std::string& a) { return a.find("Cases I and II") != std::string::npos; });
    o.need(flagged, "Case I/II annotation");
    o.need(check_is(r, "codes.D-steiner", "S(3,6,22)") && check_is(r, "codes.D-size", "77") &&
               check_is(r, "codes.D-rank", "11"),
           "Steiner system");
    o.need(check_is(r, "parity.case-III", "odd"), "parities");
    o.need(check_is(r, "generation.span-count", "1024"), "span count");
    o.need(check_is(r, "index.value", "2") && check_is(r, "index.odd-witness", "found") &&
               check_passes(r, "index.witness-outside-L"),
           "index 2 with witness");
    return o;
  });

  criterion(10, "property suites: Gegenbauer, simplex plug-back, LP monotonicity, determinism", 600, [] {
    Outcome o;
    oracle::Gen gen(10);
    for (unsigned n = 3; n <= 24; ++n) {
      for (unsigned j = 0; j <= 10; ++j) {
        for (unsigned k = j + 1; k <= 10; ++k) {
          if (oracle::weighted_inner(gegenbauer(n, j), gegenbauer(n, k), n) != 0) o.need(false, "orthogonality");
        }
      }
    }
    for (int trial = 0; trial < 200; ++trial) {
      const unsigned n = static_cast<unsigned>(gen.integer(3, 30));
      const RationalPolynomial p = gen.polynomial(static_cast<unsigned>(gen.integer(0, 10)));
      const auto f = gegenbauer_expand(p, n);
      RationalPolynomial back;
      for (std::size_t k = 0; k < f.size(); ++k) back += gegenbauer(n, static_cast<unsigned>(k)) * f[k];
      if (back != p) o.need(false, "expansion round-trip");
    }
    for (int trial = 0; trial < 300; ++trial) {
      const LinearProgram lp = gen.linear_program(2, static_cast<unsigned>(gen.integer(1, 5)), true);
      const LpResult r = simplex_solve(lp);
      const auto ref = oracle::two_variable_lp_by_vertices(lp);
      if (r.status == LpStatus::kOptimal) {
        if (!satisfies_constraints(lp, r.x) || objective_value(lp, r.x) != r.value || !ref || *ref != r.value) {
          o.need(false, "simplex plug-back");
        }
      } else if (r.status == LpStatus::kInfeasible) {
        if (ref || !verify_farkas(lp, r.farkas)) o.need(false, "simplex infeasibility");
      } else {
        o.need(false, "bounded program reported unbounded");
      }
    }
    for (int trial = 0; trial < 25; ++trial) {
      const unsigned n = static_cast<unsigned>(gen.integer(4, 12));
      std::set<unsigned> small, large;
      for (unsigned d = 1; d <= n; ++d) {
        const auto roll = gen.integer(0, 2);
        if (roll == 0) small.insert(d);
        if (roll <= 1) large.insert(d);
      }
      if (small.empty()) small.insert(n);
      large.insert(small.begin(), small.end());
      if (binary_code_lp_bound(n, small).optimum > binary_code_lp_bound(n, large).optimum) o.need(false, "monotonicity");
    }
    for (Pipeline p : {Pipeline::k891, Pipeline::k4600}) {
      const ChainModel m = build_chain_model(p, g_leech);
      std::optional<std::string> ref;
      for (std::size_t seed : {0U, 1U, 7U}) {
        for (unsigned threads : {1U, 2U}) {
          UniquenessOptions opt;
          opt.seed = seed;
          opt.threads = threads;
          opt.leech = &g_leech;
          const auto json = run_uniqueness_on(p, m, opt).checks_json();
          if (!ref) ref = json;
          if (json != *ref) o.need(false, "determinism (" + to_string(p) + ")");
        }
      }
    }
    return o;
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
