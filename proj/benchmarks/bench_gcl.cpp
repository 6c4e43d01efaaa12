#include <benchmark/benchmark.h>

#include "ndmech/ndmech.hpp"

namespace {

using namespace ndmech;

// subtractive gcd on x,y in 0..side-1
struct GcdSetup {
    VarSpace vars;
    Quilt quilt;
    StateSet diagonal;
};

GcdSetup gcd_setup(std::int64_t side) {
    VarSpace vs = VarSpace::make({{"x", 0, side - 1}, {"y", 0, side - 1}});
    const SpacePtr& space = vs.space();
    StateSet d1(space), d2(space), diag(space);
    for (int s = 0; s < space->size(); ++s) {
        const auto v = vs.decode(s);
        if (v[0] > v[1]) d1.insert(s);
        if (v[1] > v[0]) d2.insert(s);
        if (v[0] == v[1]) diag.insert(s);
    }
    Patch p1 = Patch::from_function(d1, [&](int s) {
        auto v = vs.decode(s);
        return vs.encode({v[0] - v[1], v[1]});
    });
    Patch p2 = Patch::from_function(d2, [&](int s) {
        auto v = vs.decode(s);
        return vs.encode({v[0], v[1] - v[0]});
    });
    Quilt q(space, {std::move(p1), std::move(p2)});
    return {std::move(vs), std::move(q), std::move(diag)};
}

void BM_WpDoGcd(benchmark::State& state) {
    GcdSetup setup = gcd_setup(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(wp_do(setup.quilt, setup.diagonal));
    }
}
BENCHMARK(BM_WpDoGcd)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_DoDeltaGcd(benchmark::State& state) {
    GcdSetup setup = gcd_setup(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(do_delta(setup.quilt));
    }
}
BENCHMARK(BM_DoDeltaGcd)->Arg(8)->Arg(16)->Arg(32);

void BM_WpIfGcd(benchmark::State& state) {
    GcdSetup setup = gcd_setup(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(wp_if(setup.quilt, setup.diagonal));
    }
}
BENCHMARK(BM_WpIfGcd)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
