#include <benchmark/benchmark.h>

#include "jamnet/engine.hpp"
#include "jamnet/broadcast_adp.hpp"

namespace {

void DrawBehavior(benchmark::State& state) {
    jamnet::RngStream rng(42, 0, 0);
    for (auto _ : state) {
        auto b = jamnet::draw_behavior(rng, 0.02, 4, true);
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(DrawBehavior);

void ResolveSlot(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const std::uint32_t channels = 4;
    std::vector<jamnet::SlotBehavior> behaviors(n);
    jamnet::RngStream rng(7, 0, 0);
    for (auto& b : behaviors) b = jamnet::draw_behavior(rng, 0.25, channels, false);
    jamnet::JamSet jam(channels);
    jamnet::ResolveScratch scratch;
    std::vector<std::optional<jamnet::Feedback>> out;
    for (auto _ : state) {
        jamnet::resolve_slot_into(behaviors, jam, channels, scratch, out);
        benchmark::DoNotOptimize(out);
    }
}
BENCHMARK(ResolveSlot)->Arg(16)->Arg(64)->Arg(256);

void EngineSlotLoop(benchmark::State& state) {
    for (auto _ : state) {
        jamnet::EngineConfig cfg;
        cfg.protocol = {jamnet::ProtocolConfig::Kind::Adp, 2.0};
        cfg.adversary = jamnet::AdversarySpec::no_jam();
        cfg.n = static_cast<std::uint64_t>(state.range(0));
        cfg.channels = 4;
        cfg.seed = 11;
        cfg.slot_limit = 20000;
        auto trace = jamnet::run_execution(cfg);
        benchmark::DoNotOptimize(trace);
    }
    state.SetItemsProcessed(state.iterations() * 20000 * state.range(0));
}
BENCHMARK(EngineSlotLoop)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
