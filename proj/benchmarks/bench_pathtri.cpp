#include <benchmark/benchmark.h>

#include <vector>

#include "pathtri/collapse.hpp"
#include "pathtri/cycles.hpp"
#include "pathtri/nerve.hpp"
#include "pathtri/presentation.hpp"
#include "pathtri/triangulation.hpp"

namespace {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::vector<pathtri::Point2> random_points(int n, std::uint64_t seed) {
    std::vector<pathtri::Point2> pts;
    pts.reserve(n);
    std::uint64_t s = seed;
    for (int i = 0; i < n; ++i) {
        s = mix64(s);
        const double x = 100.0 * static_cast<double>(s >> 11) * 0x1.0p-53;
        s = mix64(s);
        const double y = 100.0 * static_cast<double>(s >> 11) * 0x1.0p-53;
        pts.push_back({x, y});
    }
    return pts;
}

void BM_Triangulate(benchmark::State& state) {
    const auto pts = random_points(static_cast<int>(state.range(0)), 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pathtri::triangulate(pts));
    }
}
BENCHMARK(BM_Triangulate)->Arg(32)->Arg(128)->Arg(512);

void BM_GoodCover(benchmark::State& state) {
    const auto t = pathtri::triangulate(random_points(static_cast<int>(state.range(0)), 11));
    for (auto _ : state) {
        benchmark::DoNotOptimize(pathtri::check_good_cover(t));
    }
}
BENCHMARK(BM_GoodCover)->Arg(32)->Arg(128);

void BM_HomotopySystem(benchmark::State& state) {
    const auto t = pathtri::triangulate(random_points(64, 13));
    for (auto _ : state) {
        benchmark::DoNotOptimize(pathtri::build_homotopy_system(t));
    }
}
BENCHMARK(BM_HomotopySystem);

void BM_CollapseCone(benchmark::State& state) {
    const pathtri::ConeSpec spec{{2, 3}, {0, 1}, {4, 1}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(pathtri::collapse_cone(spec, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_CollapseCone)->Arg(10)->Arg(100)->Arg(1000);

void BM_ElementaryCollapse(benchmark::State& state) {
    const auto t = pathtri::triangulate(random_points(64, 17));
    for (auto _ : state) {
        benchmark::DoNotOptimize(pathtri::elementary_collapse_sequence(t));
    }
}
BENCHMARK(BM_ElementaryCollapse);

}  // namespace

BENCHMARK_MAIN();
