#include "metabel/ingest.hpp"
#include "metabel/linalg.hpp"
#include "metabel/metabelian.hpp"
#include "metabel/obstruction.hpp"
#include "metabel/seifert.hpp"
#include "metabel/snf.hpp"

#include <benchmark/benchmark.h>

using namespace metabel;

namespace {

const Poly kF{1, -1, 1};

SeifertData knot() {
  const auto corpus = bundled_corpus();
  const KnotRecord* k = find_knot(corpus, "10_99");
  return validate_seifert(k->name, k->seifert);
}

}  // namespace

static void BM_AlexanderPolynomial(benchmark::State& state) {
  const AlexanderPresentation a = alexander_matrix(knot());
  for (auto _ : state) benchmark::DoNotOptimize(alexander_polynomial(a));
}
BENCHMARK(BM_AlexanderPolynomial)->Unit(benchmark::kMicrosecond);

static void BM_SmithNormalForm(benchmark::State& state) {
  const AlexanderPresentation a = alexander_matrix(knot());
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a, state.range(0) != 0));
}
BENCHMARK(BM_SmithNormalForm)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_ObstructionNullspace(benchmark::State& state) {
  const SeifertData s = knot();
  const NumberField field(kF);
  const ObstructionSystem sys = build_obstruction_system(s, field, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nf_nullspace(field, sys.coefficients));
  state.counters["unknowns"] = static_cast<double>(sys.unknowns());
}
BENCHMARK(BM_ObstructionNullspace)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_Filtration(benchmark::State& state) {
  const SeifertData s = knot();
  for (auto _ : state) benchmark::DoNotOptimize(run_filtration(s));
}
BENCHMARK(BM_Filtration)->Unit(benchmark::kMillisecond);

static void BM_HomomorphismCheck(benchmark::State& state) {
  const SeifertData s = knot();
  const NumberField field(kF);
  const ObstructionSystem sys = build_obstruction_system(s, field, 3);
  const RepBuilder b(s, field, 3, solution_matrix(sys, solution_basis(sys).front()));
  for (auto _ : state) benchmark::DoNotOptimize(verify_homomorphism(b, static_cast<std::size_t>(state.range(0)), 1));
}
BENCHMARK(BM_HomomorphismCheck)->Arg(100)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
