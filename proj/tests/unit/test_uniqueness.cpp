#include "leechcert/cases.hpp"
#include "leechcert/errors.hpp"
#include "leechcert/frame.hpp"
#include "leechcert/uniqueness.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <random>

using namespace leechcert;

namespace {

const std::vector<ScaledVector>& leech() {
  static const std::vector<ScaledVector> vs = leech_minimal_vectors();
  return vs;
}

const ChainModel& model(Pipeline p) {
  static const ChainModel m891 = build_chain_model(Pipeline::k891, leech());
  static const ChainModel m4600 = build_chain_model(Pipeline::k4600, leech());
  return p == Pipeline::k891 ? m891 : m4600;
}

CertificateReport run(Pipeline p, std::size_t seed, unsigned threads) {
  UniquenessOptions o;
  o.seed = seed;
  o.threads = threads;
  o.leech = &leech();
  return run_uniqueness_on(p, model(p), o);
}

const Check* find(const CertificateReport& r, const std::string& name) {
  auto it = std::find_if(r.checks.begin(), r.checks.end(), [&](const Check& c) { return c.name == name; });
  return it == r.checks.end() ? nullptr : &*it;
}

}  // namespace

TEST_CASE("891 pipeline passes with the expected case sizes") {
  const auto r = run(Pipeline::k891, 0, 0);
  for (const auto& c : r.checks) {
    CAPTURE(c.name);
    CAPTURE(c.actual);
    CHECK(c.pass);
  }
  REQUIRE(find(r, "cases.sizes"));
  CHECK(find(r, "cases.sizes")->actual == "42, 1, 336, 512");
  CHECK_FALSE(find(r, "index.value")->asserted);
}

TEST_CASE("4600 pipeline passes and flags the Case I/II count") {
  const auto r = run(Pipeline::k4600, 0, 0);
  CHECK(r.pass());
  CHECK(find(r, "cases.sizes")->actual == "44, 44, 2464, 1024, 1024");
  CHECK(find(r, "index.value")->actual == "2");
  CHECK(r.annotations.size() == 2);
}

TEST_CASE("property: reports are identical across frame seeds and thread counts") {
  for (Pipeline p : {Pipeline::k891, Pipeline::k4600}) {
    const std::string reference = run(p, 0, 1).checks_json();
    for (std::size_t seed : {1U, 7U, 100U, 4599U}) {
      for (unsigned threads : {1U, 3U}) {
        CAPTURE(seed);
        CAPTURE(threads);
        CHECK(run(p, seed, threads).checks_json() == reference);
      }
    }
  }
}

TEST_CASE("a corrupted member makes the report fail without throwing") {
  ChainModel bad = model(Pipeline::k891);
  // Replace one member by a minimal vector outside the code.
  const auto& vs = leech();
  auto it = std::find_if(vs.begin(), vs.end(), [&](const ScaledVector& v) {
    return std::find(bad.members.begin(), bad.members.end(), v) == bad.members.end();
  });
  bad.members[17] = *it;
  UniquenessOptions o;
  o.leech = &vs;
  CertificateReport r;
  CHECK_NOTHROW(r = run_uniqueness_on(Pipeline::k891, bad, o));
  CHECK_FALSE(r.pass());
  const auto failed = std::count_if(r.checks.begin(), r.checks.end(), [](const Check& c) { return !c.pass; });
  CHECK(failed > 0);
}

TEST_CASE("JSON report shape") {
  const auto r = run(Pipeline::k891, 0, 1);
  const auto j = nlohmann::json::parse(r.to_json(true));
  CHECK(j["pass"] == true);
  CHECK(j["checks"].is_array());
  for (const auto& c : j["checks"]) {
    for (const char* key : {"name", "anchor", "expected", "actual", "pass"}) CHECK(c.contains(key));
  }
  CHECK(j.contains("timings"));
  CHECK_FALSE(nlohmann::json::parse(r.to_json(false)).contains("timings"));
  CHECK(r.to_text(false).find("RESULT: pass") != std::string::npos);
}

TEST_CASE("frame construction invariants") {
  const auto& m = model(Pipeline::k891);
  const D24Frame f = find_d24_frame(m.members, m.anchors, 3);
  CHECK_FALSE(check_frame(f).has_value());
  CHECK(f.G.size() == 24);
  CHECK(f.pool_sizes.size() == 21);
  for (auto s : f.pool_sizes) CHECK(s >= 43);
  for (const auto& a : m.anchors) CHECK(in_sqrt2_dn(a, f, 24));
  for (const auto& w : m.members) {
    const FrameCoords c = coordinates_in_frame(w, f);
    int sq = 0;
    for (int x : c) sq += x * x;
    CHECK(sq == 32);
  }
  // Coordinates are additive.
  const ScaledVector sum = m.members[0] + m.members[1];
  const FrameCoords a = coordinates_in_frame(m.members[0], f);
  const FrameCoords b = coordinates_in_frame(m.members[1], f);
  const FrameCoords c = coordinates_in_frame(sum, f);
  for (std::size_t i = 0; i < 24; ++i) CHECK(c[i] == a[i] + b[i]);
}

TEST_CASE("lattice assembly rejects odd and non-integral generators") {
  const auto& m = model(Pipeline::k891);
  std::vector<ScaledVector> members = m.members;
  ScaledVector v;  // norm 3/2 in true scale: raw norm 12
  v.coords[0] = 2;
  v.coords[1] = 2;
  v.coords[2] = 2;
  members.push_back(v);
  CHECK_THROWS_AS(assemble_L(members, m.anchors), NotIntegral);
  ScaledVector w;  // raw norm 24: norm 3
  for (int i = 0; i < 24; ++i) w.coords[static_cast<std::size_t>(i)] = 1;
  CHECK_THROWS_AS(assemble_L(std::vector<ScaledVector>{w}, {}), NotEven);
}

TEST_CASE("case classification rejects vectors off the templates") {
  const auto& m = model(Pipeline::k4600);
  const D24Frame f = normalize_frame(find_d24_frame(m.members, m.anchors, 0), m.anchors[0], std::nullopt, m.members,
                                     Pipeline::k4600);
  std::vector<ScaledVector> members = m.members;
  members.push_back(-m.anchors[0]);
  CHECK_THROWS_AS(classify_cases(members, f, Pipeline::k4600), UnclassifiableVector);
}

TEST_CASE("property: random single-member corruptions never crash and always fail") {
  const auto& vs = leech();
  std::mt19937_64 rng(5);
  for (Pipeline p : {Pipeline::k891, Pipeline::k4600}) {
    for (int trial = 0; trial < 6; ++trial) {
      ChainModel bad = model(p);
      const std::size_t slot = std::uniform_int_distribution<std::size_t>(0, bad.members.size() - 1)(rng);
      ScaledVector replacement;
      do {
        replacement = vs[std::uniform_int_distribution<std::size_t>(0, vs.size() - 1)(rng)];
      } while (std::find(bad.members.begin(), bad.members.end(), replacement) != bad.members.end());
      bad.members[slot] = replacement;
      UniquenessOptions o;
      o.leech = &vs;
      CertificateReport r;
      CHECK_NOTHROW(r = run_uniqueness_on(p, bad, o));
      CHECK_FALSE(r.pass());
    }
  }
}
