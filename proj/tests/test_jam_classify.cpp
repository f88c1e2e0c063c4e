#include <doctest.h>

#include <stdexcept>

#include <vector>

#include "jamnet/jam_classify.hpp"
#include "jamnet/rng.hpp"

using namespace jamnet;

TEST_CASE("window classification on clean and saturated traces") {
    const JamSeverityEvent weak{Cmp::GE, {95, 100}, Cmp::GE, {95, 100}};
    std::vector<std::uint32_t> clean(40, 10);  // C = 10, everything open
    CHECK(classify_jamming(clean, 10, weak));
    std::vector<std::uint32_t> dead(40, 0);
    CHECK(!classify_jamming(dead, 10, weak));
}

TEST_CASE("boundary fractions are inclusive under >=") {
    // R=10, exactly one slot with >=10% of channels unjammed.
    std::vector<std::uint32_t> counts(10, 0);
    counts[7] = 1;  // 1 of 10 channels
    const JamSeverityEvent ev{Cmp::GE, {1, 10}, Cmp::GE, {1, 10}};
    CHECK(classify_jamming(counts, 10, ev));
}

TEST_CASE("empty windows are rejected") {
    const JamSeverityEvent ev{Cmp::GE, {1, 2}, Cmp::GE, {1, 2}};
    std::vector<std::uint32_t> empty;
    CHECK_THROWS_AS(classify_jamming(empty, 4, ev), std::invalid_argument);
}

TEST_CASE("phase classification needs all three steps weakly jammed") {
    const std::uint32_t channels = 100;
    std::vector<std::uint32_t> clean(100, 100);

    CHECK(classify_phase(clean, clean, clean, channels) == PhaseJamming::WeaklyJammed);

    // 6% of slots fall below 95% unjammed: strongly jammed.
    std::vector<std::uint32_t> spotty = clean;
    for (int i = 0; i < 6; ++i) spotty[i] = 94;
    CHECK(classify_phase(spotty, clean, clean, channels) == PhaseJamming::StronglyJammed);

    std::vector<std::uint32_t> dead(100, 0);
    CHECK(classify_phase(clean, clean, dead, channels) == PhaseJamming::StronglyJammed);
}

TEST_CASE("super-epoch weak iff at least half its phases weak") {
    using PJ = PhaseJamming;
    std::vector<PJ> half = {PJ::WeaklyJammed, PJ::StronglyJammed, PJ::WeaklyJammed,
                            PJ::StronglyJammed};
    CHECK(super_epoch_weakly_jammed(half));
    std::vector<PJ> minority = {PJ::WeaklyJammed, PJ::StronglyJammed, PJ::StronglyJammed};
    CHECK(!super_epoch_weakly_jammed(minority));
}

TEST_CASE("negation and complement identities hold exactly on random windows") {
    const Cmp all[] = {Cmp::GT, Cmp::GE, Cmp::LT, Cmp::LE};
    for (int trial = 0; trial < 3000; ++trial) {
        RngStream rng(0xC1A5, 9, static_cast<std::uint64_t>(trial));
        const std::uint32_t channels = 1 + rng.next_below(8);
        std::vector<std::uint32_t> counts(1 + rng.next_below(50));
        for (auto& c : counts) c = rng.next_below(channels + 1);
        const std::uint64_t dx = 1 + rng.next_below(12);
        const std::uint64_t dy = 1 + rng.next_below(12);
        const Ratio x{rng.next_below(static_cast<std::uint32_t>(dx) + 1), dx};
        const Ratio y{rng.next_below(static_cast<std::uint32_t>(dy) + 1), dy};
        const Cmp cx = all[rng.next_below(4)];
        const Cmp cy = all[rng.next_below(4)];

        const JamSeverityEvent ev{cx, x, cy, y};
        // not E^{(cy y)}(cx x) == E^{(not cy, y)}(cx x)
        const JamSeverityEvent negated{cx, x, negate_cmp(cy), y};
        CHECK(classify_jamming(counts, channels, ev) !=
              classify_jamming(counts, channels, negated));

        // E^{(cy y)}(cx x) == E^{(comp cy, 1-y)}(not cx, x)
        const JamSeverityEvent complemented{negate_cmp(cx), x, complement_cmp(cy), one_minus(y)};
        CHECK(classify_jamming(counts, channels, ev) ==
              classify_jamming(counts, channels, complemented));
    }
}

TEST_CASE("the worked complement example: not E^(>=y)(>=x) == E^(>1-y)(<x)") {
    for (int trial = 0; trial < 500; ++trial) {
        RngStream rng(0xBEE5, 4, static_cast<std::uint64_t>(trial));
        const std::uint32_t channels = 1 + rng.next_below(6);
        std::vector<std::uint32_t> counts(1 + rng.next_below(30));
        for (auto& c : counts) c = rng.next_below(channels + 1);
        const Ratio x{rng.next_below(11), 10};
        const Ratio y{rng.next_below(11), 10};
        const JamSeverityEvent original{Cmp::GE, x, Cmp::GE, y};
        const JamSeverityEvent rewritten{Cmp::LT, x, Cmp::GT, one_minus(y)};
        CHECK(classify_jamming(counts, channels, original) !=
              classify_jamming(counts, channels, rewritten));
    }
}
