#include <benchmark/benchmark.h>

#include "zigzag/characters.hpp"
#include "zigzag/composition.hpp"
#include "zigzag/graph.hpp"
#include "zigzag/paintbox.hpp"
#include "zigzag/qsym.hpp"
#include "zigzag/sampler.hpp"

#include <cstdint>
#include <vector>

using namespace zigzag;

namespace {

Composition staircase(int n) {
    std::vector<int> parts;
    for (int next = 1; n > 0; ++next) {
        int part = std::min(next, n);
        parts.push_back(part);
        n -= part;
    }
    return Composition(std::move(parts));
}

OrientedPaintbox fixture() {
    return OrientedPaintbox({{Rat(0), Rat(3, 8), Orientation::up},
                             {Rat(3, 8), Rat(3, 4), Orientation::down},
                             {Rat(3, 4), Rat(1), Orientation::up}});
}

void bm_dimension(benchmark::State& state) {
    const auto lam = staircase(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        // fresh DP each time would hit the cache; count the cold path by
        // summing a whole level instead
        Int total = 0;
        for (const auto& c : compositions_of(static_cast<int>(state.range(0))))
            total += dimension(c);
        benchmark::DoNotOptimize(total);
    }
    (void)lam;
}
BENCHMARK(bm_dimension)->Arg(8)->Arg(10)->Arg(12);

void bm_path_count(benchmark::State& state) {
    const auto lam = staircase(static_cast<int>(state.range(0)));
    const Composition mu({2, 1});
    for (auto _ : state) {
        auto paths = path_count(mu, lam);
        benchmark::DoNotOptimize(paths);
    }
}
BENCHMARK(bm_path_count)->Arg(10)->Arg(12)->Arg(14);

void bm_f_product(benchmark::State& state) {
    const int half = static_cast<int>(state.range(0));
    const auto a = QSymElement::term(Basis::F, staircase(half));
    const auto b = QSymElement::term(Basis::F, staircase(half));
    for (auto _ : state) {
        auto prod = f_product(a, b);
        benchmark::DoNotOptimize(prod);
    }
}
BENCHMARK(bm_f_product)->Arg(3)->Arg(5)->Arg(6);

void bm_evaluate(benchmark::State& state) {
    const auto pb = fixture();
    const auto lam = staircase(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        // fresh character per iteration so the cache never amortizes
        auto chi = paintbox_character(pb);
        benchmark::DoNotOptimize(chi(lam));
    }
}
BENCHMARK(bm_evaluate)->Arg(8)->Arg(12)->Arg(16);

void bm_sample_arrangement(benchmark::State& state) {
    const auto pb = fixture();
    std::uint64_t seed = 0;
    for (auto _ : state) {
        auto pre = sample_arrangement(pb, static_cast<int>(state.range(0)), ++seed);
        benchmark::DoNotOptimize(pre.initial_ranks);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_sample_arrangement)->Arg(16)->Arg(256)->Arg(4096);

} // namespace

BENCHMARK_MAIN();
