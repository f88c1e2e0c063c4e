#include <doctest.h>

#include "jamnet/analytic.hpp"
#include "jamnet/permutation.hpp"
#include "jamnet/radio.hpp"
#include "jamnet/verify/oracles.hpp"

using namespace jamnet;

TEST_CASE("pi_q maps low positions onto the unjammed set, C=5 q={2,4}") {
    JamSet q = JamSet::from_unjammed(5, std::vector<std::uint32_t>{2, 4});
    const ChannelPermutation pi = ChannelPermutation::from_unjammed(q);
    CHECK(pi.mapping() == std::vector<std::uint32_t>{2, 4, 1, 3, 5});
}

TEST_CASE("a fully unjammed set induces the identity") {
    JamSet q(6, true);
    const ChannelPermutation pi = ChannelPermutation::from_unjammed(q);
    for (std::uint32_t ch = 1; ch <= 6; ++ch) CHECK(pi.apply(ch) == ch);
}

TEST_CASE("permuting behavior and undoing it restores the original") {
    RngStream rng(0xBEEF, 0, 0);
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint32_t channels = 1 + rng.next_below(6);
        JamSet q(channels, false);
        for (std::uint32_t ch = 1; ch <= channels; ++ch)
            if (rng.next_below(2)) q.set_unjammed(ch, true);

        std::vector<SlotBehavior> behavior(1 + rng.next_below(5));
        for (auto& b : behavior) {
            b.channel = 1 + rng.next_below(channels);
            b.action = static_cast<Action>(rng.next_below(3));
        }
        const ChannelPermutation pi = ChannelPermutation::from_unjammed(q);
        const auto there = permute_behavior(pi, behavior);
        const auto back = permute_behavior(pi.inverted(), there);
        CHECK(back == behavior);
    }
}

TEST_CASE("feedback is invariant under joint channel relabeling") {
    RngStream rng(0xCAFE, 0, 0);
    for (int trial = 0; trial < 500; ++trial) {
        const std::uint32_t channels = 1 + rng.next_below(5);
        const std::size_t n = 2 + rng.next_below(5);
        std::vector<SlotBehavior> g(n);
        for (auto& b : g) {
            b.channel = 1 + rng.next_below(channels);
            b.action = static_cast<Action>(rng.next_below(3));
            b.payload = rng.next_below(2) ? Payload::Msg : Payload::Beacon;
        }
        JamSet jam(channels, false);
        for (std::uint32_t ch = 1; ch <= channels; ++ch)
            if (rng.next_below(2)) jam.set_unjammed(ch, true);
        JamSet q(channels, false);
        for (std::uint32_t ch = 1; ch <= channels; ++ch)
            if (rng.next_below(2)) q.set_unjammed(ch, true);

        const ChannelPermutation pi = ChannelPermutation::from_unjammed(q);
        CHECK(resolve_slot(g, jam, channels) ==
              resolve_slot(permute_behavior(pi, g), pi.apply_to(jam), channels));
    }
}

TEST_CASE("hearing probabilities on hand instances") {
    ProbabilityProfile lonely;
    lonely.channels = 3;
    lonely.nodes = {{0.4, true, true}, {0.0, false, true}, {0.0, true, true}};
    const AnalyticProbs probs = analytic_probs(lonely, 0);
    CHECK(probs.silence == doctest::Approx(1.0));
    CHECK(probs.message == doctest::Approx(0.0));

    ProbabilityProfile pair;
    pair.channels = 2;
    pair.nodes = {{0.1, false, true}, {0.5, true, true}, {0.5, true, true}};
    CHECK(analytic_probs(pair, 0).silence == doctest::Approx(0.5625));  // (1 - 1/4)^2
}

TEST_CASE("closed forms equal exact enumeration for mixed informed sets") {
    verify::ExactProfile ep;
    ep.channels = 2;
    ep.nodes = {{64, true}, {32, false}, {100, true}};
    for (std::size_t u = 0; u < ep.nodes.size(); ++u) {
        const auto silence = verify::exact_silence(ep, u);
        const auto message = verify::exact_message(ep, u);
        for (std::uint32_t ch = 1; ch <= 2; ++ch) {
            CHECK(silence == verify::brute_silence(ep, u, ch));
            CHECK(message == verify::brute_message(ep, u, ch));
        }
        const AnalyticProbs probs = analytic_probs(ep.to_profile(), u);
        CHECK(probs.silence == doctest::Approx(silence.to_double(ep.base())).epsilon(1e-12));
        CHECK(probs.message == doctest::Approx(message.to_double(ep.base())).epsilon(1e-12));
    }
}

TEST_CASE("sandwich bounds hold across random profiles with P_V <= 1/2") {
    for (int trial = 0; trial < 300; ++trial) {
        RngStream rng(0xFAC7, 5, static_cast<std::uint64_t>(trial));
        ProbabilityProfile profile;
        profile.channels = 1 + rng.next_below(4);
        const std::size_t n = 2 + rng.next_below(6);
        double mass = 0.0;
        for (std::size_t u = 0; u < n; ++u) {
            double p = rng.next_unit() * 0.5;
            profile.nodes.push_back({p, rng.next_below(2) == 1, true});
            mass += p / profile.channels;
        }
        if (mass > 0.5) {
            for (auto& e : profile.nodes) e.p *= 0.5 / mass;
        }
        for (std::size_t u = 0; u < n; ++u) {
            const AnalyticProbs probs = analytic_probs(profile, u);
            const SandwichBounds b = analytic_bounds(profile, u);
            CHECK(b.silence_lo <= probs.silence + 1e-12);
            CHECK(probs.silence <= b.silence_hi + 1e-12);
            CHECK(b.message_lo <= probs.message + 1e-12);
            CHECK(probs.message <= b.message_hi + 1e-12);
        }
    }
}
