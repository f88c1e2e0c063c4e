#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "jamnet/broadcast_adp.hpp"

using namespace jamnet;

TEST_CASE("first epoch index") {
    CHECK(adp_first_epoch(16, 16) == 2);  // symmetric case, both logs zero
    CHECK(adp_first_epoch(64, 4) == 4);
    CHECK(adp_first_epoch(4, 64) == 4);   // mirrored
    CHECK(adp_first_epoch(32, 4) == 4);   // ceil(1.5) = 2
}

TEST_CASE("schedule arithmetic") {
    const AdpSchedule s = adp_schedule(3, 16, 4, 1.0);
    CHECK(s.slots == 3072);  // 1 * 4^3 * 3 * lg^2(16)
    CHECK(s.p == doctest::Approx(std::sqrt(4.0 / 16.0) / 8.0));

    const AdpSchedule s64 = adp_schedule(4, 64, 4, 1.0);
    CHECK(s64.p == doctest::Approx(1.0 / 64.0));
    CHECK(s64.first_epoch == 4);
}

TEST_CASE("schedule rejects epochs before the first index and bad constants") {
    CHECK_THROWS_AS(adp_schedule(3, 64, 4, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(adp_schedule(4, 64, 4, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(adp_first_epoch(1, 4), std::invalid_argument);
}

TEST_CASE("epoch-to-epoch ratios: p halves, R quadruples times (i+1)/i") {
    for (int i = 2; i < 8; ++i) {
        const AdpSchedule cur = adp_schedule(i, 16, 16, 1.0);
        const AdpSchedule next = adp_schedule(i + 1, 16, 16, 1.0);
        CHECK(next.p == doctest::Approx(cur.p / 2.0));
        // lg^2 n integral here, so the ratio is exact
        CHECK(next.slots * static_cast<std::uint64_t>(i) ==
              cur.slots * 4ull * static_cast<std::uint64_t>(i + 1));
    }
}

TEST_CASE("working probability validity from the first epoch") {
    for (std::uint64_t n : {2ull, 3ull, 16ull, 100ull, 1000ull}) {
        for (std::uint32_t c : {1u, 2u, 7u, 64u, 500u}) {
            const int first = adp_first_epoch(n, c);
            const AdpSchedule s = adp_schedule(first, n, c, 1.0);
            CHECK(s.p <= 0.5);
            CHECK(s.p <= static_cast<double>(c) / (4.0 * static_cast<double>(n)));
        }
    }
}

TEST_CASE("halting rule: boundary inclusive") {
    AdpState state;
    state.epoch = 4;
    state.epoch_slot = 1000;

    state.silent_count = 50;
    CHECK(adp_epoch_end(state, 1000, 0.1).halt);  // 50 >= 1000*0.1/2

    state.silent_count = 49;
    const AdpEpochDecision cont = adp_epoch_end(state, 1000, 0.1);
    CHECK(!cont.halt);
    CHECK(cont.next.epoch == 5);
    CHECK(cont.next.silent_count == 0);
    CHECK(cont.next.epoch_slot == 0);

    state.silent_count = 0;
    CHECK(!adp_epoch_end(state, 1000, 0.1).halt);  // heavy jamming: keep going
}

TEST_CASE("node automaton counts silence, learns the message, halts at the boundary") {
    AdpNode node(4, 2, 1.0, false);
    CHECK(!node.informed());
    CHECK(node.working_probability() > 0.0);

    node.on_feedback(Feedback::received(Payload::Msg));
    CHECK(node.informed());
    node.on_feedback(Feedback::received(Payload::Beacon));
    node.on_feedback(Feedback::noise());
    CHECK(node.state().silent_count == 0);

    // Feed silence on every slot of the first epoch: must halt at its end.
    const std::uint64_t epoch_slots = node.epoch_slots();
    bool halted = false;
    for (std::uint64_t s = 0; s < epoch_slots; ++s) {
        node.on_feedback(Feedback::silence());
        halted = node.on_slot_end();
    }
    CHECK(halted);
    CHECK(node.halted());
    CHECK(node.working_probability() == 0.0);
}

TEST_CASE("node advances epochs when silence is scarce") {
    AdpNode node(4, 2, 1.0, true);
    const int first = node.state().epoch;
    const std::uint64_t epoch_slots = node.epoch_slots();
    for (std::uint64_t s = 0; s < epoch_slots; ++s) node.on_slot_end();
    CHECK(!node.halted());
    CHECK(node.state().epoch == first + 1);
    CHECK(node.epoch_slots() > epoch_slots);
}
