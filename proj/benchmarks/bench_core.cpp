#include <benchmark/benchmark.h>

#include "mct/betti.hpp"
#include "mct/etale.hpp"
#include "mct/fixtures.hpp"
#include "mct/generators.hpp"
#include "mct/lattice.hpp"
#include "mct/modp.hpp"
#include "mct/rooting.hpp"

using namespace mct;

static void BM_lattice_build_reisner(benchmark::State& state) {
    const MonomialIdeal I = fixture("reisner");
    for (auto _ : state) benchmark::DoNotOptimize(LcmLattice::build(I));
}
BENCHMARK(BM_lattice_build_reisner);

static void BM_betti_gpw_reisner(benchmark::State& state) {
    const MonomialIdeal I = fixture("reisner");
    const int ell = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(betti_gpw(I, ell, Subject::quotient));
}
BENCHMARK(BM_betti_gpw_reisner)->Arg(2)->Arg(5);

static void BM_betti_taylor_reisner(benchmark::State& state) {
    const MonomialIdeal I = fixture("reisner");
    for (auto _ : state) benchmark::DoNotOptimize(betti_taylor_oracle(I, 2, Subject::quotient));
}
BENCHMARK(BM_betti_taylor_reisner);

static void BM_yan_cohomology_reisner(benchmark::State& state) {
    const MonomialIdeal I = fixture("reisner");
    for (auto _ : state) benchmark::DoNotOptimize(yan_cohomology(I, 2));
}
BENCHMARK(BM_yan_cohomology_reisner);

static void BM_rank_mod_p_sparse(benchmark::State& state) {
    MatModP m;
    m.p = 5;
    m.rows = 400;
    m.cols = 6000; // past the dense cutoff
    for (int r = 0; r < m.rows; ++r)
        for (int k = 0; k < 8; ++k) // distinct cells: 701k < cols for k < 8
            m.entries.push_back({r, (r * 613 + k * 701) % m.cols, 1 + (r + k) % 4});
    for (auto _ : state) benchmark::DoNotOptimize(rank_mod_p(m));
}
BENCHMARK(BM_rank_mod_p_sparse);

static void BM_rooting_complex_reisner(benchmark::State& state) {
    const LcmLattice L = LcmLattice::build(fixture("reisner"));
    const RootingMap rho = rooting_from_order(L, L.atoms());
    for (auto _ : state) benchmark::DoNotOptimize(rooting_complex(L, rho));
}
BENCHMARK(BM_rooting_complex_reisner);

static void BM_verify_triangle(benchmark::State& state) {
    const MonomialIdeal I = fixture("triangle");
    const GeneratorSet G = generators_from_heights(I);
    for (auto _ : state) benchmark::DoNotOptimize(verify_radical_equality(I, G, {2, 3, 5}));
}
BENCHMARK(BM_verify_triangle);

BENCHMARK_MAIN();
