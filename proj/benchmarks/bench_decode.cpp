#include <benchmark/benchmark.h>

#include "qec13/channel.hpp"

using namespace qec13;

namespace {

std::vector<Sym> random_frame(int qubits, double p, std::uint64_t seed) {
    ChannelParams params;
    params.p = p;
    SplitMix64 rng(seed);
    return sample_errors(params, qubits, rng).labels.symbols;
}

void BM_SyndromesConvF4(benchmark::State& state) {
    auto pair = preset("f4_conv");
    const auto& stab = *pair.stabilizer_conv;
    const int L = static_cast<int>(state.range(0));
    auto e = random_frame(3 * L, 0.01, 1);
    for (auto _ : state) benchmark::DoNotOptimize(syndromes_conv(e, stab));
    state.SetItemsProcessed(state.iterations() * L);
}
BENCHMARK(BM_SyndromesConvF4)->Arg(12)->Arg(120)->Arg(1200);

void BM_DecodeConvF4(benchmark::State& state) {
    auto pair = preset("f4_conv");
    const auto& stab = *pair.stabilizer_conv;
    const int L = static_cast<int>(state.range(0));
    auto s = syndromes_conv(random_frame(3 * L, 0.01, 2), stab);
    for (auto _ : state) benchmark::DoNotOptimize(decode_conv_f4(s));
    state.SetItemsProcessed(state.iterations() * L);
}
BENCHMARK(BM_DecodeConvF4)->Arg(12)->Arg(120)->Arg(1200);

void BM_DecodeConvCss(benchmark::State& state) {
    auto pair = preset("css_conv");
    const auto& stab = *pair.stabilizer_conv;
    const int L = static_cast<int>(state.range(0));
    PauliErrorSeq e(random_frame(3 * L, 0.01, 3));
    auto [bit, phase] = split_planes(e);
    auto sb = syndromes_conv(bit.symbols, stab);
    auto sp = syndromes_conv(phase.symbols, stab);
    for (auto _ : state) {
        benchmark::DoNotOptimize(decode_conv_css(sb));
        benchmark::DoNotOptimize(decode_conv_css(sp));
    }
    state.SetItemsProcessed(state.iterations() * L);
}
BENCHMARK(BM_DecodeConvCss)->Arg(12)->Arg(120)->Arg(1200);

void BM_ViterbiF4(benchmark::State& state) {
    auto pair = preset("f4_conv");
    const auto& stab = *pair.stabilizer_conv;
    const int L = static_cast<int>(state.range(0));
    auto s = syndromes_conv(random_frame(3 * L, 0.01, 4), stab);
    for (auto _ : state) benchmark::DoNotOptimize(viterbi_coset_leader(stab, s));
    state.SetItemsProcessed(state.iterations() * L);
}
BENCHMARK(BM_ViterbiF4)->Arg(12)->Arg(48);

void BM_DecodeTb9(benchmark::State& state) {
    auto pair = preset("tb9");
    const auto& stab = *pair.stabilizer_block;
    auto e = random_frame(9, 0.05, 5);
    auto s = syndromes_tb(e, stab, 1);
    for (auto _ : state) benchmark::DoNotOptimize(decode_tb9(s));
}
BENCHMARK(BM_DecodeTb9);

void BM_DecodeTb15(benchmark::State& state) {
    auto pair = preset("tb15");
    const auto& stab = *pair.stabilizer_block;
    PauliErrorSeq e(random_frame(15, 0.05, 6));
    auto [bit, phase] = split_planes(e);
    auto s = syndromes_tb(bit.symbols, stab, 2);
    for (auto _ : state) benchmark::DoNotOptimize(decode_tb15(s));
}
BENCHMARK(BM_DecodeTb15);

void BM_CosetLeaderTable(benchmark::State& state) {
    auto pair = preset("tb9");
    for (auto _ : state) benchmark::DoNotOptimize(coset_leader_table(pair));
}
BENCHMARK(BM_CosetLeaderTable);

void BM_MonteCarloTrials(benchmark::State& state) {
    auto pair = preset(state.range(0) == 0 ? "tb9" : "f4_conv");
    ChannelParams params;
    params.p = 0.004;
    params.seed = 9;
    const std::uint64_t trials = 20000;
    for (auto _ : state)
        benchmark::DoNotOptimize(monte_carlo(pair, DecoderId::table, params, trials, 1));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(trials));
}
BENCHMARK(BM_MonteCarloTrials)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
