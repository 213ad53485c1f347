#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "tbwt/edge_minimize.hpp"
#include "tbwt/fm_index.hpp"
#include "tbwt/suffix_array.hpp"
#include "tbwt/text.hpp"
#include "tbwt/tunnel.hpp"

namespace {

std::string random_body(size_t len, uint32_t sigma, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> sym(0, static_cast<int>(sigma) - 1);
    std::string s(len, 'a');
    for (char& c : s) c = static_cast<char>('a' + sym(rng));
    return s;
}

std::string repetitive_body(size_t len, uint64_t seed) {
    std::string unit = random_body(64, 4, seed);
    std::string s;
    s.reserve(len + unit.size());
    while (s.size() < len) s += unit;
    s.resize(len);
    return s;
}

void BM_SuffixArray(benchmark::State& state) {
    tbwt::Text t = tbwt::ingest(random_body(state.range(0), 16, 7));
    auto dense = t.dense();
    for (auto _ : state) benchmark::DoNotOptimize(tbwt::build_suffix_array(dense));
    state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SuffixArray)->Range(1 << 14, 1 << 21);

void BM_FmIndexBuild(benchmark::State& state) {
    tbwt::Text t = tbwt::ingest(random_body(state.range(0), 16, 11));
    for (auto _ : state) benchmark::DoNotOptimize(tbwt::FMIndex::build(t));
    state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FmIndexBuild)->Range(1 << 14, 1 << 20);

void BM_MinimizeEdgesRandom(benchmark::State& state) {
    tbwt::FMIndex fm = tbwt::FMIndex::build(tbwt::ingest(random_body(state.range(0), 4, 13)));
    for (auto _ : state) benchmark::DoNotOptimize(tbwt::minimize_edges(fm));
    state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MinimizeEdgesRandom)->Range(1 << 14, 1 << 20);

void BM_MinimizeEdgesRepetitive(benchmark::State& state) {
    tbwt::FMIndex fm = tbwt::FMIndex::build(tbwt::ingest(repetitive_body(state.range(0), 17)));
    for (auto _ : state) benchmark::DoNotOptimize(tbwt::minimize_edges(fm));
    state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MinimizeEdgesRepetitive)->Range(1 << 14, 1 << 20);

void BM_BuildTunneled(benchmark::State& state) {
    tbwt::FMIndex fm = tbwt::FMIndex::build(tbwt::ingest(repetitive_body(state.range(0), 19)));
    tbwt::EdgeMinResult r = tbwt::minimize_edges(fm);
    for (auto _ : state)
        benchmark::DoNotOptimize(tbwt::build_tunneled(fm, r.boundaries, r.k_star));
    state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildTunneled)->Range(1 << 14, 1 << 20);

void BM_InvertTunneled(benchmark::State& state) {
    tbwt::FMIndex fm = tbwt::FMIndex::build(tbwt::ingest(repetitive_body(state.range(0), 23)));
    tbwt::EdgeMinResult r = tbwt::minimize_edges(fm);
    tbwt::TunneledBWT tun = tbwt::build_tunneled(fm, r.boundaries, r.k_star);
    for (auto _ : state) benchmark::DoNotOptimize(tbwt::invert_tunneled(tun));
    state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_InvertTunneled)->Range(1 << 14, 1 << 20);

void BM_WaveletRank(benchmark::State& state) {
    tbwt::FMIndex fm = tbwt::FMIndex::build(tbwt::ingest(random_body(1 << 20, 16, 29)));
    std::mt19937_64 rng(31);
    for (auto _ : state) {
        uint8_t c = rng() % fm.sigma();
        benchmark::DoNotOptimize(fm.wavelet().rank(c, rng() % (fm.size() + 1)));
    }
}
BENCHMARK(BM_WaveletRank);

void BM_GetIntervals(benchmark::State& state) {
    tbwt::FMIndex fm = tbwt::FMIndex::build(tbwt::ingest(random_body(1 << 20, 16, 37)));
    std::mt19937_64 rng(41);
    for (auto _ : state) {
        uint64_t lb = 1 + rng() % fm.size();
        uint64_t rb = std::min<uint64_t>(fm.size(), lb + 1024);
        benchmark::DoNotOptimize(fm.get_intervals(lb, rb));
    }
}
BENCHMARK(BM_GetIntervals);

} // namespace

BENCHMARK_MAIN();
