#include <benchmark/benchmark.h>

#include "extsq/dirichlet.hpp"
#include "extsq/identities.hpp"
#include "extsq/partition.hpp"
#include "extsq/satake.hpp"
#include "extsq/schur.hpp"
#include "extsq/sympoly.hpp"

using namespace extsq;

namespace {

// Dense degree-k polynomial without touching the h cache.
SymPoly dense_homogeneous(std::uint32_t k, std::size_t nvars) {
    SymPoly out(nvars);
    std::vector<std::uint32_t> exps(nvars, 0);
    auto rec = [&](auto&& self, std::size_t var, std::uint32_t remaining) -> void {
        if (var + 1 == nvars) {
            exps[var] = remaining;
            out += SymPoly::from_monomial(Monomial(nvars, exps));
            return;
        }
        for (std::uint32_t e = 0; e <= remaining; ++e) {
            exps[var] = e;
            self(self, var + 1, remaining - e);
        }
        exps[var] = 0;
    };
    rec(rec, 0, k);
    return out;
}

void BM_PolyMul(benchmark::State& state) {
    const std::uint32_t k = static_cast<std::uint32_t>(state.range(0));
    SymPoly h = dense_homogeneous(k, 5);
    for (auto _ : state) benchmark::DoNotOptimize(h * h);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PolyMul)->Arg(4)->Arg(6)->Arg(8);

void BM_QuotientNormalize(benchmark::State& state) {
    SymPoly p = dense_homogeneous(8, 5) * dense_homogeneous(4, 5);
    for (auto _ : state) benchmark::DoNotOptimize(p.quotient_normalized());
}
BENCHMARK(BM_QuotientNormalize);

void BM_SchurOracleTableaux(benchmark::State& state) {
    Partition lambda{4, 3, 2};
    for (auto _ : state) benchmark::DoNotOptimize(schur_oracle(lambda, 5));
}
BENCHMARK(BM_SchurOracleTableaux);

void BM_WedgeProductSeries(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(wedge_factor_y(5, 0, 5, true));
}
BENCHMARK(BM_WedgeProductSeries);

void BM_NumericEulerSide(benchmark::State& state) {
    SatakeData data = random_unimodular_satake(4, {2, 3, 5, 7}, 1);
    for (auto _ : state) benchmark::DoNotOptimize(exterior_square_euler_side(data, 100));
}
BENCHMARK(BM_NumericEulerSide);

}  // namespace

int main(int argc, char** argv) {
    ::benchmark::Initialize(&argc, argv);
    if (::benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    ::benchmark::RunSpecifiedBenchmarks();
    ::benchmark::Shutdown();
    return 0;
}
