#include "leechcert/bounds.hpp"
#include "leechcert/codes.hpp"
#include "leechcert/f2.hpp"
#include "leechcert/leech.hpp"
#include "leechcert/pairwise.hpp"
#include "leechcert/polynomial.hpp"
#include "leechcert/uniqueness.hpp"

#include <benchmark/benchmark.h>

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

void BM_LeechConstruction(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(leech_minimal_vectors());
}
BENCHMARK(BM_LeechConstruction)->Unit(benchmark::kMillisecond);

void BM_PairHistogram4600(benchmark::State& state) {
  const auto& m = model(Pipeline::k4600).members;
  for (auto _ : state) benchmark::DoNotOptimize(pair_dot_histogram(m, static_cast<unsigned>(state.range(0))));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * m.size() * (m.size() - 1) / 2));
}
BENCHMARK(BM_PairHistogram4600)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_FullMinimalScan(benchmark::State& state) {
  const auto& vs = leech();
  for (auto _ : state) benchmark::DoNotOptimize(scan_minimal_pairs(vs, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_FullMinimalScan)->Arg(0)->Iterations(1)->Unit(benchmark::kSecond);

void BM_IntersectionNumbers891(benchmark::State& state) {
  const auto& m = model(Pipeline::k891);
  const DerivedCode code(m.anchors, m.members, pipeline_levels(Pipeline::k891));
  for (auto _ : state) benchmark::DoNotOptimize(intersection_numbers(code, 1));
}
BENCHMARK(BM_IntersectionNumbers891)->Unit(benchmark::kMillisecond);

void BM_Gegenbauer(benchmark::State& state) {
  for (auto _ : state) {
    for (unsigned k = 0; k <= 10; ++k) benchmark::DoNotOptimize(gegenbauer(23, k));
  }
}
BENCHMARK(BM_Gegenbauer);

void BM_CertificateSearch4600(benchmark::State& state) {
  const std::vector<Rational> nodes{-1, make_rational(-1, 3), 0, make_rational(1, 3)};
  for (auto _ : state) benchmark::DoNotOptimize(find_spherical_certificate(23, make_rational(1, 3), 7, nodes));
}
BENCHMARK(BM_CertificateSearch4600)->Unit(benchmark::kMillisecond);

void BM_BinaryLp22(benchmark::State& state) {
  std::set<unsigned> allowed;
  for (unsigned d = 8; d <= 22; ++d) allowed.insert(d);
  for (auto _ : state) benchmark::DoNotOptimize(binary_code_lp_bound(22, allowed));
}
BENCHMARK(BM_BinaryLp22)->Unit(benchmark::kMillisecond);

void BM_SpanCountWithPrefix(benchmark::State& state) {
  const auto gens = golay_generators();
  for (auto _ : state) benchmark::DoNotOptimize(f2_span_count_with_prefix(gens, parse_prefix("000")));
}
BENCHMARK(BM_SpanCountWithPrefix);

void BM_Uniqueness(benchmark::State& state) {
  const Pipeline p = state.range(0) == 891 ? Pipeline::k891 : Pipeline::k4600;
  UniquenessOptions o;
  o.leech = &leech();
  o.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(run_uniqueness_on(p, model(p), o));
}
BENCHMARK(BM_Uniqueness)->Arg(891)->Arg(4600)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
