#include <benchmark/benchmark.h>

#include <random>

#include "pointcode/canon.hpp"
#include "pointcode/design.hpp"
#include "pointcode/search.hpp"

using namespace pointcode;

namespace {

BitMatrix random_matrix(uint32_t rows, uint32_t cols, uint32_t seed) {
    std::mt19937 rng(seed);
    BitMatrix m(rows, cols);
    for (uint32_t i = 0; i < rows; ++i)
        for (uint32_t j = 0; j < cols; ++j)
            if (rng() & 1) m.set(i, j);
    return m;
}

Design k4_design() {
    return Design::validate(BitMatrix::from_strings({
                                "111000",
                                "100110",
                                "010101",
                                "001011",
                            }),
                            4, 2, 1);
}

const LinearCode& dim7_design_code() {
    // The (15,7) code holding all three (10,4,2)-designs: the largest
    // desk-scale search target.
    static LinearCode code = [] {
        SoEnumOptions opt;
        opt.min_distance = 4;
        opt.forbid_zero_coordinate = true;
        for (LinearCode& c : enumerate_so_codes(15, 7, opt))
            if (c.weight_distribution().at(6) > 0 && c.dimension() == 7) return std::move(c);
        throw Error("bench fixture missing");
    }();
    return code;
}

void BM_rref(benchmark::State& state) {
    BitMatrix m = random_matrix(static_cast<uint32_t>(state.range(0)),
                                static_cast<uint32_t>(state.range(1)), 42);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_rref)->Args({12, 25})->Args({13, 26})->Args({16, 24});

void BM_weight_distribution(benchmark::State& state) {
    BitMatrix m = rref(random_matrix(static_cast<uint32_t>(state.range(0)), 25, 7)).matrix;
    for (auto _ : state) {
        std::vector<uint64_t> counts(26, 0);
        for_each_codeword(m, [&](const BitVector& w) { ++counts[w.weight()]; });
        benchmark::DoNotOptimize(counts);
    }
    state.SetItemsProcessed(state.iterations() * (int64_t(1) << m.rows()));
}
BENCHMARK(BM_weight_distribution)->Arg(10)->Arg(12);

void BM_canonical_form_code(benchmark::State& state) {
    BipartiteIncidence g = code_to_graph(dim7_design_code());
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_canonical_form_code);

void BM_design_canonical(benchmark::State& state) {
    Design d = k4_design();
    for (auto _ : state) benchmark::DoNotOptimize(design_canonical(d));
}
BENCHMARK(BM_design_canonical);

void BM_find_designs_15_7(benchmark::State& state) {
    const LinearCode& c = dim7_design_code();
    DesignSearchSpec spec = DesignSearchSpec::make(10, 4, 2, false);
    for (auto _ : state) benchmark::DoNotOptimize(find_designs(c, spec));
}
BENCHMARK(BM_find_designs_15_7);

void BM_enumerate_so_15_7(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_so_codes(15, 7));
}
BENCHMARK(BM_enumerate_so_15_7)->Unit(benchmark::kMillisecond);

void BM_selfdual_ladder(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_selfdual(static_cast<uint32_t>(state.range(0))));
}
BENCHMARK(BM_selfdual_ladder)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
