#include <doctest.h>

#include <stdexcept>

#include "jamnet/engine.hpp"
#include "jamnet/one_to_one.hpp"

using namespace jamnet;

namespace {

// Minimal single-slot trace builder; node 0 is the source.
ExecutionTrace one_slot(std::uint32_t channels, std::vector<SlotBehavior> behaviors,
                        const JamSet& jam) {
    ExecutionTrace t;
    t.n = behaviors.size();
    t.channels = channels;
    SlotRecord rec;
    rec.slot = 0;
    rec.jam_unjammed = jam.unjammed_indices();
    rec.feedback = resolve_slot(behaviors, jam, channels);
    rec.behaviors = std::move(behaviors);
    rec.energy_nodes.assign(t.n, 0);
    t.slots.push_back(std::move(rec));
    t.outcome.assign(t.n, NodeOutcome{});
    t.slots_run = 1;
    return t;
}

}  // namespace

TEST_CASE("many listeners on one channel cost bob one unit") {
    JamSet open(3, true);
    const ExecutionTrace t = one_slot(3,
                                      {{1, Action::Idle, Payload::Beacon},
                                       {2, Action::Listen, Payload::Beacon},
                                       {2, Action::Listen, Payload::Beacon},
                                       {2, Action::Listen, Payload::Beacon}},
                                      open);
    const TwoPartyExecution two = one_to_one_adapter(t, 0);
    CHECK(two.bob_cost == 1);
    CHECK(two.non_source_cost == 3);
    CHECK(two.outcome_identical);
    CHECK(two.cost_bound_ok);
}

TEST_CASE("a unique non-source broadcaster is relayed verbatim") {
    JamSet open(2, true);
    const ExecutionTrace t = one_slot(2,
                                      {{2, Action::Idle, Payload::Beacon},
                                       {1, Action::Send, Payload::Beacon},
                                       {1, Action::Listen, Payload::Beacon}},
                                      open);
    const TwoPartyExecution two = one_to_one_adapter(t, 0);
    CHECK(two.bob_cost == 2);  // one cast + one listen
    CHECK(two.outcome_identical);
    CHECK(!two.bob_informed_at.has_value());  // beacon, not the message
}

TEST_CASE("an empty slot costs nothing") {
    JamSet open(2, true);
    const ExecutionTrace t = one_slot(2,
                                      {{1, Action::Idle, Payload::Beacon},
                                       {1, Action::Idle, Payload::Beacon},
                                       {2, Action::Idle, Payload::Beacon}},
                                      open);
    const TwoPartyExecution two = one_to_one_adapter(t, 0);
    CHECK(two.bob_cost == 0);
    CHECK(two.alice_cost == 0);
    CHECK(two.outcome_identical);
}

TEST_CASE("source deliveries inform bob at the original slot") {
    JamSet open(2, true);
    const ExecutionTrace t = one_slot(2,
                                      {{1, Action::Send, Payload::Msg},
                                       {1, Action::Listen, Payload::Beacon}},
                                      open);
    const TwoPartyExecution two = one_to_one_adapter(t, 0);
    REQUIRE(two.bob_informed_at.has_value());
    CHECK(*two.bob_informed_at == 0);
    CHECK(two.outcome_identical);
}

TEST_CASE("traces without slot records are rejected") {
    ExecutionTrace t;
    t.n = 3;
    t.channels = 2;
    CHECK_THROWS_AS(one_to_one_adapter(t, 0), std::invalid_argument);
}

TEST_CASE("full protocol traces replay outcome-identically") {
    for (int trial = 0; trial < 5; ++trial) {
        EngineConfig cfg;
        cfg.protocol = {ProtocolConfig::Kind::Adp, 2.0};
        cfg.n = 2 + static_cast<std::uint64_t>(trial);
        cfg.channels = 1 + trial % 3;
        cfg.adversary = trial % 2 == 0 ? AdversarySpec::no_jam()
                                       : AdversarySpec::random_budgeted(0.4, 1500);
        cfg.seed = split_seed(0x10E, trial);
        cfg.slot_limit = 100000;
        cfg.trace_mode = TraceMode::Full;
        const ExecutionTrace t = run_execution(cfg);
        REQUIRE(!t.limit_exhausted);
        const TwoPartyExecution two = one_to_one_adapter(t, 0);
        CHECK(two.outcome_identical);
        CHECK(two.cost_bound_ok);
        CHECK(two.bob_cost <= two.non_source_cost);
    }
}
