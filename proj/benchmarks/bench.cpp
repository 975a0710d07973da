#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "proxinerve/axioms.hpp"
#include "proxinerve/clusters.hpp"
#include "proxinerve/nerve.hpp"
#include "proxinerve/rng.hpp"
#include "proxinerve/voronoi.hpp"

using namespace proxinerve;

namespace {

std::vector<Point> uniform_sites(std::uint64_t seed, std::size_t n) {
    Rng rng(seed);
    std::vector<Point> sites;
    sites.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        sites.push_back({rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0)});
    return sites;
}

void BM_BuildTessellation(benchmark::State& state) {
    const auto sites =
        uniform_sites(17, static_cast<std::size_t>(state.range(0)));
    const Rect box{0, 0, 1, 1};
    for (auto _ : state) {
        auto t = build_tessellation(sites, box);
        benchmark::DoNotOptimize(t);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildTessellation)
    ->Arg(50)
    ->Arg(200)
    ->Arg(800)
    ->Unit(benchmark::kMillisecond);

void BM_ClustersAndNerves(benchmark::State& state) {
    const auto sites =
        uniform_sites(17, static_cast<std::size_t>(state.range(0)));
    const auto t = build_tessellation(sites, Rect{0, 0, 1, 1});
    for (auto _ : state) {
        std::vector<Nerve> nerves;
        for (const Cluster& c : maximal_nucleus_clusters(t))
            nerves.push_back(build_nerve(c, t));
        benchmark::DoNotOptimize(nerves);
    }
}
BENCHMARK(BM_ClustersAndNerves)
    ->Arg(50)
    ->Arg(200)
    ->Unit(benchmark::kMicrosecond);

void BM_AxiomSuite(benchmark::State& state) {
    for (auto _ : state) {
        auto reports =
            run_full_suite(0, static_cast<std::size_t>(state.range(0)));
        benchmark::DoNotOptimize(reports);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_AxiomSuite)->Arg(25)->Arg(100)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
