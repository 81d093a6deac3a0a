#include "radext/family.hpp"
#include "radext/profile.hpp"
#include "radext/registry.hpp"
#include "radext/resolvability.hpp"
#include "radext/roots.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

using namespace radext;

namespace {

const ExtremalParams kGeneric{make_rational(1, 3), make_rational(-2, 5), make_rational(3, 7), make_rational(1, 4), 3};

void BM_QSequence(benchmark::State& state)
{
    const int K = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(q_sequence(kGeneric, AmbientSign::Plus, K));
}
BENCHMARK(BM_QSequence)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

void BM_IsolateRoots(benchmark::State& state)
{
    const QSequence seq(kGeneric, AmbientSign::Plus, static_cast<int>(state.range(0)));
    const LaurentPoly& q = seq[static_cast<int>(state.range(0))];
    for (auto _ : state)
        benchmark::DoNotOptimize(isolate_positive_roots(q));
}
BENCHMARK(BM_IsolateRoots)->Arg(6)->Arg(10)->Arg(14);

void BM_ObstructionScan(benchmark::State& state)
{
    const ExampleEntry e = builtin_profile("exKENWB");
    const Interval dom = Interval::open(make_rational(1), make_rational(281, 280));
    for (auto _ : state)
        benchmark::DoNotOptimize(obstruction_scan(e.params, AmbientSign::Plus, dom, 11));
}
BENCHMARK(BM_ObstructionScan);

void BM_IntegrateProfile(benchmark::State& state)
{
    const ExampleEntry e = builtin_profile(state.range(0) == 0 ? "burns-simanca" : "exfond");
    const double t0 = std::log(e.anchor_r);
    ProfileOptions opts;
    opts.tol = 1e-9;
    opts.samples = 101;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            integrate_profile(e.params, e.anchor_y.get_d(), t0, {std::log(e.r_lo), std::log(e.r_hi)}, opts));
}
BENCHMARK(BM_IntegrateProfile)->Arg(0)->Arg(1);

} // namespace

BENCHMARK_MAIN();
