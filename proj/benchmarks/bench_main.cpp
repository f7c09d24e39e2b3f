#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "gvfit/domain.hpp"
#include "gvfit/gvf.hpp"
#include "gvfit/mwk.hpp"
#include "gvfit/polish.hpp"
#include "gvfit/smoothness.hpp"

using namespace gvfit;

namespace {

SampleSet grid_samples(const Domain& dom, int count, unsigned seed, bool level_indexed) {
    std::mt19937 rng(seed);
    std::vector<int> ids(static_cast<std::size_t>(dom.vertex_count()));
    for (int v = 0; v < dom.vertex_count(); ++v) ids[static_cast<std::size_t>(v)] = v;
    std::shuffle(ids.begin(), ids.end(), rng);

    std::uniform_real_distribution<double> value(-10.0, 10.0);
    std::vector<Sample> entries;
    for (int i = 0; i < count; ++i) {
        double v = level_indexed ? 1.0 + (i % 4) : value(rng);
        entries.push_back({ids[static_cast<std::size_t>(i)], v});
    }
    return SampleSet(entries, dom);
}

void BM_MultiSourceDistances(benchmark::State& state) {
    Domain grid = build_grid_domain(64, 64, 4);
    std::vector<int> sources{0, 511, 2048, 4095, 777, 3131};
    for (auto _ : state) {
        auto dist = multi_source_distances(grid, sources);
        benchmark::DoNotOptimize(dist.data());
    }
}

void BM_MwkMidExtension(benchmark::State& state) {
    const int samples = static_cast<int>(state.range(0));
    Domain grid = build_grid_domain(32, 32, 4);
    SampleSet set = grid_samples(grid, samples, 99, false);
    double lip = lipschitz_constant(set, grid).lip;
    for (auto _ : state) {
        ScalarField mid = mwk_mid_extension(set, grid, lip);
        benchmark::DoNotOptimize(mid.values.data());
    }
}

void BM_GvfFill(benchmark::State& state) {
    Domain grid = build_grid_domain(64, 64, 4);
    LevelSequence levels({1, 2, 3, 4});
    SampleSet set = grid_samples(grid, 16, 7, true);
    for (auto _ : state) {
        ScalarField filled = gvf_fill(set, grid, levels, GvfStrategy::mid_envelope);
        benchmark::DoNotOptimize(filled.values.data());
    }
}

void BM_Polish1D(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> value(-1.0, 1.0);
    std::vector<double> seq(static_cast<std::size_t>(n));
    for (auto& v : seq) v = value(rng);
    std::vector<bool> guiding(seq.size(), false);
    for (std::size_t j = 0; j < seq.size(); j += 16) guiding[j] = true;
    PolishConfig cfg{1e-6, 500, 1.0};
    for (auto _ : state) {
        PolishOutcome out = polish_1d(seq, guiding, cfg);
        benchmark::DoNotOptimize(out.values.data());
    }
}

void BM_DifferenceLadder(benchmark::State& state) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> value(-100, 100);
    std::vector<double> seq(1024);
    for (auto& v : seq) v = static_cast<double>(value(rng));
    for (auto _ : state) {
        DifferenceLadder ladder = difference_ladder(seq);
        benchmark::DoNotOptimize(ladder.lip.data());
    }
}

void BM_CountExtremePoints(benchmark::State& state) {
    std::vector<double> field(128 * 128);
    for (int y = 0; y < 128; ++y)
        for (int x = 0; x < 128; ++x)
            field[static_cast<std::size_t>(y) * 128 + x] =
                std::sin(0.2 * x) * std::cos(0.17 * y);
    for (auto _ : state) {
        int count = count_extreme_points(field, 128, 128);
        benchmark::DoNotOptimize(count);
    }
}

}  // namespace

BENCHMARK(BM_MultiSourceDistances);
BENCHMARK(BM_MwkMidExtension)->Arg(8)->Arg(32);
BENCHMARK(BM_GvfFill);
BENCHMARK(BM_Polish1D)->Arg(512)->Arg(4096);
BENCHMARK(BM_DifferenceLadder);
BENCHMARK(BM_CountExtremePoints);

BENCHMARK_MAIN();
