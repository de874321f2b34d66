#include <phasesteg/bits.hpp>
#include <phasesteg/codec.hpp>
#include <phasesteg/fixture.hpp>

#include <benchmark/benchmark.h>

#include <string>

namespace {

const phasesteg::AudioClip& cover()
{
    static const auto clip = phasesteg::make_fixture({.seconds = 5});
    return clip;
}

void embed_bench(benchmark::State& state, phasesteg::Codec codec)
{
    const std::string message(static_cast<std::size_t>(state.range(0)), 'm');
    for (auto _ : state) {
        auto stego = phasesteg::embed(codec, cover(), message);
        benchmark::DoNotOptimize(stego.samples.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cover().samples.size()));
}

void extract_bench(benchmark::State& state, phasesteg::Codec codec)
{
    const std::string message(static_cast<std::size_t>(state.range(0)), 'm');
    const auto stego = phasesteg::embed(codec, cover(), message);
    for (auto _ : state) {
        auto text = phasesteg::extract(codec, stego, 8 * message.size());
        benchmark::DoNotOptimize(text.data());
    }
}

void BM_EmbedImproved(benchmark::State& s) { embed_bench(s, phasesteg::Codec::improved); }
void BM_EmbedTraditional(benchmark::State& s) { embed_bench(s, phasesteg::Codec::traditional); }
void BM_ExtractImproved(benchmark::State& s) { extract_bench(s, phasesteg::Codec::improved); }
void BM_ExtractTraditional(benchmark::State& s) { extract_bench(s, phasesteg::Codec::traditional); }

BENCHMARK(BM_EmbedImproved)->Arg(4)->Arg(32)->Arg(127)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EmbedTraditional)->Arg(4)->Arg(32)->Arg(127)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExtractImproved)->Arg(4)->Arg(32)->Arg(127)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExtractTraditional)->Arg(4)->Arg(32)->Arg(127)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
