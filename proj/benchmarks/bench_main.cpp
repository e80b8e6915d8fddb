#include <benchmark/benchmark.h>

#include <string>

#include "dbl/dga.hpp"
#include "dbl/hopf.hpp"
#include "dbl/koszul.hpp"
#include "dbl/lie.hpp"
#include "dbl/runner.hpp"
#include "dbl/spec_file.hpp"
#include "dbl/uea.hpp"

using namespace dbl;

namespace {

AlgebraSpec fixture(const std::string& name) {
    return load_spec(std::string(DOUBLECHECK_BENCH_SPECS) + "/" + name + ".json");
}

void BM_BuildDouble(benchmark::State& state) {
    const AlgebraSpec spec = fixture("sl2");
    for (auto _ : state) benchmark::DoNotOptimize(build_double(spec.g, spec.rho));
}
BENCHMARK(BM_BuildDouble);

void BM_CasimirCentral(benchmark::State& state) {
    const AlgebraSpec spec = fixture("sl2");
    const DoubleData dd = build_double(spec.g, spec.rho);
    for (auto _ : state) {
        const Uea uea(dd.algebra, 1);
        benchmark::DoNotOptimize(check_casimir_central(uea, casimir(uea, dd)));
    }
}
BENCHMARK(BM_CasimirCentral);

void BM_HopfAxioms(benchmark::State& state) {
    const AlgebraSpec spec = fixture("sqed1");
    const DoubleData dd = build_double(spec.g, spec.rho);
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const HopfDouble A(dd, order, 6);
        benchmark::DoNotOptimize(verify_hopf_axioms(A));
    }
}
BENCHMARK(BM_HopfAxioms)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_MomentCohomology(benchmark::State& state) {
    const AlgebraSpec spec = fixture("sqed3");
    const CommutativeDGA moment = build_moment_dga(spec.g, spec.rho);
    const int max_weight = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(cohomology(moment, {0, max_weight}, {-2, 0}));
}
BENCHMARK(BM_MomentCohomology)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_KoszulRoundtrip(benchmark::State& state) {
    const AlgebraSpec spec = fixture("sl2");
    const DoubleData dd = build_double(spec.g, spec.rho);
    const int order = spec.truncation_order;
    const ModuleCatalog catalog = build_catalog(spec, dd, order);
    const FiniteModule& adjoint = catalog.module("adjoint");
    for (auto _ : state) {
        const KoszulContext context(dd, order);
        const int cap = minimal_weight_cap(functor_F(context, adjoint), -kRoundtripWindow);
        benchmark::DoNotOptimize(check_roundtrip(context, adjoint, kRoundtripWindow, cap));
    }
}
BENCHMARK(BM_KoszulRoundtrip)->Unit(benchmark::kMillisecond);

void BM_VerifyAll(benchmark::State& state) {
    const AlgebraSpec spec = fixture("sqed1");
    for (auto _ : state) benchmark::DoNotOptimize(run_verify(spec, {}));
}
BENCHMARK(BM_VerifyAll)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
