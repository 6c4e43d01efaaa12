#include <benchmark/benchmark.h>

#include <random>

#include "ndmech/ndmech.hpp"

namespace {

using namespace ndmech;

SpacePtr space_of(int n) {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) names.push_back("s" + std::to_string(i));
    return StateSpace::make(std::move(names));
}

// sparse random structure with a sprinkling of fixed points and dead ends
ChoiceMap random_structure(const SpacePtr& space, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int n = space->size();
    std::uniform_int_distribution<int> fanout(0, 3);
    std::uniform_int_distribution<int> any(0, n - 1);
    ChoiceMap d(space);
    for (int x = 0; x < n; ++x) {
        const int k = fanout(rng);
        if (k == 0 && x % 7 == 0) continue;
        StateSet succ(space);
        if (x % 11 == 0) {
            succ.insert(x);
        } else {
            for (int i = 0; i < k; ++i) succ.insert(any(rng));
            if (succ.is_empty()) succ.insert(any(rng));
        }
        d.set(x, std::move(succ));
    }
    return d;
}

void BM_ConvergentPoints(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SpacePtr space = space_of(n);
    ChoiceMap d = random_structure(space, 42);
    for (auto _ : state) {
        benchmark::DoNotOptimize(convergent_points(d));
    }
}
BENCHMARK(BM_ConvergentPoints)->Arg(64)->Arg(256)->Arg(1024)->Arg(4096);

void BM_StablePoints(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SpacePtr space = space_of(n);
    ChoiceMap d = random_structure(space, 43);
    for (auto _ : state) {
        benchmark::DoNotOptimize(stable_points(d));
    }
}
BENCHMARK(BM_StablePoints)->Arg(64)->Arg(256)->Arg(1024)->Arg(4096);

void BM_LimitMap(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SpacePtr space = space_of(n);
    ChoiceMap d = random_structure(space, 44);
    for (auto _ : state) {
        benchmark::DoNotOptimize(limit_map(d));
    }
}
BENCHMARK(BM_LimitMap)->Arg(64)->Arg(256)->Arg(1024);

void BM_ReconstructFromInverse(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SpacePtr space = space_of(n);
    ChoiceMap d = random_structure(space, 45);
    SetTransformer mu = SetTransformer::from_inverse(d);
    for (auto _ : state) {
        benchmark::DoNotOptimize(delta_from_multiplicative(mu));
    }
}
BENCHMARK(BM_ReconstructFromInverse)->Arg(64)->Arg(256)->Arg(1024);

}  // namespace
