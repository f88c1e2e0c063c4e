#include <doctest.h>

#include <stdexcept>

#include <cstdio>
#include <fstream>

#include "jamnet/adversary.hpp"
#include "jamnet/verify/oracles.hpp"

using namespace jamnet;

namespace {

ProbabilityProfile uniform_profile(std::uint32_t channels, std::size_t n, double p,
                                   std::size_t informed) {
    ProbabilityProfile profile;
    profile.channels = channels;
    for (std::size_t u = 0; u < n; ++u)
        profile.nodes.push_back({p, u < informed, true});
    return profile;
}

HistoryView history_at(std::uint64_t slot) {
    HistoryView h;
    h.slots_elapsed = slot;
    return h;
}

}  // namespace

TEST_CASE("full-prefix jams everything for exactly T/C slots") {
    Adversary eve(AdversarySpec::full_prefix(100), 1, 4);
    JamSet jam(4);
    const ProbabilityProfile profile = uniform_profile(4, 2, 0.25, 1);
    for (std::uint64_t slot = 0; slot < 25; ++slot) {
        eve.next_jam_set(history_at(slot), profile, jam);
        CHECK(jam.unjammed_count() == 0);
    }
    CHECK(eve.spent() == 100);
    eve.next_jam_set(history_at(25), profile, jam);
    CHECK(jam.unjammed_count() == 4);
    CHECK(eve.spent() == 100);
}

TEST_CASE("budget truncation keeps the lowest channels and depletes for good") {
    Adversary eve(AdversarySpec::full_prefix(102), 1, 4);
    JamSet jam(4);
    const ProbabilityProfile profile = uniform_profile(4, 2, 0.25, 1);
    for (std::uint64_t slot = 0; slot < 25; ++slot) eve.next_jam_set(history_at(slot), profile, jam);
    CHECK(eve.spent() == 100);

    eve.next_jam_set(history_at(25), profile, jam);  // only 2 units left
    CHECK(jam.unjammed_count() == 2);
    CHECK(!jam.is_unjammed(1));
    CHECK(!jam.is_unjammed(2));
    CHECK(jam.is_unjammed(3));
    CHECK(eve.depleted());
    CHECK(eve.spent() == 102);

    eve.next_jam_set(history_at(26), profile, jam);
    CHECK(jam.unjammed_count() == 4);
    CHECK(eve.spent() == 102);
}

TEST_CASE("no-jam leaves every channel open forever") {
    Adversary eve(AdversarySpec::no_jam(), 1, 3);
    JamSet jam(3);
    const ProbabilityProfile profile = uniform_profile(3, 2, 0.25, 1);
    for (std::uint64_t slot = 0; slot < 1000; ++slot) {
        eve.next_jam_set(history_at(slot), profile, jam);
        CHECK(jam.unjammed_count() == 3);
    }
    CHECK(eve.spent() == 0);
}

TEST_CASE("random budgeted jamming respects its ledger and is reproducible") {
    const AdversarySpec spec = AdversarySpec::random_budgeted(0.5, 500);
    Adversary a(spec, 77, 4);
    Adversary b(spec, 77, 4);
    JamSet ja(4), jb(4);
    const ProbabilityProfile profile = uniform_profile(4, 2, 0.25, 1);
    std::uint64_t charged = 0;
    for (std::uint64_t slot = 0; slot < 2000; ++slot) {
        a.next_jam_set(history_at(slot), profile, ja);
        b.next_jam_set(history_at(slot), profile, jb);
        CHECK(ja == jb);
        charged += ja.jammed_count();
    }
    CHECK(charged == a.spent());
    CHECK(a.spent() <= 500);
}

TEST_CASE("threshold strategy jams exactly the channels above 1/T") {
    // Uniform channel choice makes per-channel success probabilities equal,
    // so the threshold decision flips with the profile, not the channel.
    const ProbabilityProfile hot = uniform_profile(1, 2, 0.5, 1);  // success = 1/4
    const ProbabilityProfile cold = uniform_profile(4, 3, 1e-4, 1);

    Adversary eve(AdversarySpec::threshold_s(100), 1, 1);
    JamSet jam(1);
    eve.next_jam_set(history_at(0), hot, jam);
    CHECK(jam.unjammed_count() == 0);  // 0.25 > 1/100

    Adversary calm(AdversarySpec::threshold_s(100), 1, 4);
    JamSet jam4(4);
    calm.next_jam_set(history_at(0), cold, jam4);
    CHECK(jam4.unjammed_count() == 4);  // ~5e-9 < 1/100
    CHECK(calm.spent() == 0);
}

TEST_CASE("threshold strategy truncates lowest-first when the budget runs dry") {
    const ProbabilityProfile hot = uniform_profile(4, 4, 0.5, 2);
    // All four channels clear the 1/T bar, so Eve burns 4 per slot until the
    // last partial slot.
    AdversarySpec spec = AdversarySpec::threshold_s(30);
    REQUIRE(success_probability(hot, 1) > 1.0 / 30.0);
    Adversary eve(spec, 1, 4);
    JamSet jam(4);
    for (std::uint64_t slot = 0; slot < 7; ++slot) {
        eve.next_jam_set(history_at(slot), hot, jam);
        CHECK(jam.unjammed_count() == 0);
    }
    eve.next_jam_set(history_at(7), hot, jam);  // 2 units left
    CHECK(!jam.is_unjammed(1));
    CHECK(!jam.is_unjammed(2));
    CHECK(jam.is_unjammed(3));
    CHECK(jam.is_unjammed(4));
    CHECK(eve.depleted());
    eve.next_jam_set(history_at(8), hot, jam);
    CHECK(jam.unjammed_count() == 4);
    CHECK(eve.spent() == 30);
}

TEST_CASE("success probability closed form on tiny instances") {
    CHECK(success_probability(uniform_profile(2, 3, 0.3, 0), 1) == 0.0);

    // 1 informed + 1 uninformed, both p = 1/2, C = 1: only informed-sends &
    // uninformed-listens succeeds.
    CHECK(success_probability(uniform_profile(1, 2, 0.5, 1), 1) == doctest::Approx(0.25));

    // 1 informed + 2 uninformed, C = 1: (1/2) * [(1/2)^2 - 0] = 1/8.
    CHECK(success_probability(uniform_profile(1, 3, 0.5, 1), 1) == doctest::Approx(0.125));
}

TEST_CASE("success probability equals exact enumeration on random small profiles") {
    for (int trial = 0; trial < 60; ++trial) {
        RngStream rng(0x5A5A, 2, static_cast<std::uint64_t>(trial));
        verify::ExactProfile ep;
        ep.channels = 1 + rng.next_below(3);
        ep.nodes.resize(2 + rng.next_below(4));  // n in 2..5
        for (auto& node : ep.nodes) {
            node.k = rng.next_below(129);
            node.informed = rng.next_below(2) == 1;
        }
        for (SuccessScope scope : {SuccessScope::AnyInformed, SuccessScope::SourceOnly}) {
            const verify::ExactFraction exact = verify::exact_success(ep, scope);
            for (std::uint32_t ch = 1; ch <= ep.channels; ++ch) {
                CHECK(exact == verify::brute_success(ep, ch, scope));
                const double got = success_probability(ep.to_profile(), ch, scope);
                CHECK(got == doctest::Approx(exact.to_double(ep.base())).epsilon(1e-11));
            }
        }
    }
}

TEST_CASE("oblivious schedule plays its file and repeats the last entry") {
    AdversarySpec spec = AdversarySpec::oblivious({{1, 3}, {}, {2}});
    Adversary eve(spec, 1, 3);
    JamSet jam(3);
    const ProbabilityProfile profile = uniform_profile(3, 2, 0.25, 1);

    eve.next_jam_set(history_at(0), profile, jam);
    CHECK(!jam.is_unjammed(1));
    CHECK(jam.is_unjammed(2));
    CHECK(!jam.is_unjammed(3));

    eve.next_jam_set(history_at(1), profile, jam);
    CHECK(jam.unjammed_count() == 3);

    for (std::uint64_t slot = 2; slot < 6; ++slot) {
        eve.next_jam_set(history_at(slot), profile, jam);
        CHECK(!jam.is_unjammed(2));
        CHECK(jam.unjammed_count() == 2);
    }
    CHECK(eve.spent() == 2 + 0 + 4 * 1);
}

TEST_CASE("jam schedule files parse channel lists and blank lines") {
    const char* path = "jam_schedule_test.txt";
    {
        std::ofstream out(path);
        out << "1, 3\n\n2\n";
    }
    const auto schedule = load_jam_schedule(path);
    REQUIRE(schedule.size() == 3);
    CHECK(schedule[0] == std::vector<std::uint32_t>{1, 3});
    CHECK(schedule[1].empty());
    CHECK(schedule[2] == std::vector<std::uint32_t>{2});
    std::remove(path);
}

TEST_CASE("strategies requiring budgets reject their absence") {
    AdversarySpec spec;
    spec.kind = AdversarySpec::Kind::FullPrefix;
    CHECK_THROWS_AS(Adversary(spec, 1, 2), std::invalid_argument);
    spec.kind = AdversarySpec::Kind::RandomBudgeted;
    spec.density = 1.5;
    spec.budget = 10;
    CHECK_THROWS_AS(Adversary(spec, 1, 2), std::invalid_argument);
}
