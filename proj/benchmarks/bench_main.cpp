#include <benchmark/benchmark.h>

#include "donsum/conformance.hpp"
#include "donsum/fibersum.hpp"
#include "donsum/floerpair.hpp"
#include "donsum/qh2.hpp"
#include "support.hpp"

namespace {

using namespace donsum;

void BM_ExpMuSigma(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(exp_mu_sigma("s"));
}
BENCHMARK(BM_ExpMuSigma);

void BM_ExpElementProduct(benchmark::State& state) {
  const ExpElement a = parse_exp("(1/32)*exp(2*s + t*s) - (1/32)*exp(-2*s) - s/8");
  const ExpElement b = parse_exp("sinh(2*t)/2 + s*t*exp(t)");
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_ExpElementProduct);

void BM_CapPairing(benchmark::State& state) {
  const RelVector cap = cap_vector();
  for (auto _ : state) benchmark::DoNotOptimize(pair_relative(cap, cap, "s"));
}
BENCHMARK(BM_CapPairing);

void BM_CombinedSeries(benchmark::State& state) {
  const StructureSeries s = test::k3();
  Probe alpha;
  for (std::size_t i = 0; i < 4; ++i) alpha = alpha + probe("v" + std::to_string(i), s.owner.lattice.basis_vector(i));
  for (auto _ : state) benchmark::DoNotOptimize(dx_eval(s, alpha));
}
BENCHMARK(BM_CombinedSeries);

void BM_GlueWithD(benchmark::State& state) {
  const GlueInput in = make_glue_input(GlueSide{test::k3(), std::nullopt}, GlueSide{test::k3(), std::nullopt});
  for (auto _ : state) benchmark::DoNotOptimize(glue_with_d(in, "t", "s"));
}
BENCHMARK(BM_GlueWithD);

void BM_Conformance(benchmark::State& state) {
  VerifyOptions opts;
  opts.instances = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_conformance(opts));
}
BENCHMARK(BM_Conformance)->Arg(20)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
