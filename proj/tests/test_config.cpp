#include <doctest.h>

#include "jamnet/config.hpp"

using namespace jamnet;

TEST_CASE("minimal config gets all defaults") {
    const ExperimentConfig cfg =
        parse_config("protocol=adp\nn=16\nC=4\nadversary=nojam\nseeds=10\n");
    CHECK(cfg.protocol == ProtocolConfig::Kind::Adp);
    CHECK(cfg.n == 16);
    CHECK(cfg.channels == 4);
    CHECK(cfg.adversary == AdversarySpec::Kind::NoJam);
    CHECK(cfg.effective_a() == 2.0);
    CHECK(cfg.b == 20);
    CHECK(cfg.slot_limit == 10'000'000);
    CHECK(cfg.trace_mode == TraceMode::Compact);
    CHECK(cfg.output_dir == "out");
    CHECK(cfg.budgets == std::vector<std::uint64_t>{0});
    CHECK(cfg.run_seeds().size() == 10);
}

TEST_CASE("advadp defaults to a=1 and comments are ignored") {
    const ExperimentConfig cfg = parse_config(
        "# experiment\nprotocol=advadp\nn=16\nC=2\nadversary=nojam\nseeds=2  # runs\n");
    CHECK(cfg.effective_a() == 1.0);
}

TEST_CASE("the phase multiplier is pinned") {
    const std::string base = "protocol=advadp\nn=16\nC=2\nadversary=nojam\nseeds=1\n";
    CHECK_NOTHROW(parse_config(base + "b=20\n"));
    try {
        parse_config(base + "b=19\n");
        FAIL("expected rejection");
    } catch (const ConfigError& err) {
        CHECK(err.kind() == ConfigError::Kind::OutOfRange);
        CHECK(err.field() == "b");
        CHECK(std::string(err.what()).find("fixed at 20") != std::string::npos);
    }
}

TEST_CASE("degenerate node counts are rejected") {
    try {
        parse_config("protocol=adp\nn=1\nC=4\nadversary=nojam\nseeds=1\n");
        FAIL("expected rejection");
    } catch (const ConfigError& err) {
        CHECK(err.kind() == ConfigError::Kind::OutOfRange);
        CHECK(err.field() == "n");
    }
}

TEST_CASE("unknown and missing keys give distinct diagnostics") {
    try {
        parse_config("protocol=adp\nn=4\nC=1\nadversary=nojam\nseeds=1\nwhatever=1\n");
        FAIL("expected rejection");
    } catch (const ConfigError& err) {
        CHECK(err.kind() == ConfigError::Kind::UnknownKey);
        CHECK(err.field() == "whatever");
    }
    try {
        parse_config("protocol=adp\nn=4\nC=1\nseeds=1\n");
        FAIL("expected rejection");
    } catch (const ConfigError& err) {
        CHECK(err.kind() == ConfigError::Kind::MissingKey);
        CHECK(err.field() == "adversary");
    }
}

TEST_CASE("budgeted adversaries require budgets") {
    try {
        parse_config("protocol=adp\nn=4\nC=1\nadversary=fullprefix\nseeds=1\n");
        FAIL("expected rejection");
    } catch (const ConfigError& err) {
        CHECK(err.kind() == ConfigError::Kind::MissingKey);
        CHECK(err.field() == "budget");
    }
    const ExperimentConfig cfg = parse_config(
        "protocol=adp\nn=4\nC=1\nadversary=fullprefix\nbudgets=1024,4096\nseeds=2\n");
    CHECK(cfg.budgets == std::vector<std::uint64_t>{1024, 4096});
}

TEST_CASE("seed list overrides the derived seeds") {
    const ExperimentConfig cfg = parse_config(
        "protocol=adp\nn=4\nC=1\nadversary=nojam\nseed_list=7,8,9\n");
    CHECK(cfg.run_seeds() == std::vector<std::uint64_t>{7, 8, 9});
}

TEST_CASE("digest is stable and sensitive to content") {
    const std::string text = "protocol=adp\nn=16\nC=4\nadversary=nojam\nseeds=10\n";
    const ExperimentConfig a = parse_config(text);
    const ExperimentConfig b = parse_config(text);
    CHECK(config_digest(a) == config_digest(b));
    const ExperimentConfig c = parse_config("protocol=adp\nn=32\nC=4\nadversary=nojam\nseeds=10\n");
    CHECK(config_digest(a) != config_digest(c));
}

TEST_CASE("engine configs inherit the grid cell") {
    const ExperimentConfig cfg = parse_config(
        "protocol=adp\nn=8\nC=2\nadversary=fullprefix\nbudget=512\nseeds=1\nslot_limit=5000\n");
    const EngineConfig e = engine_config(cfg, 512, 99);
    CHECK(e.n == 8);
    CHECK(e.channels == 2);
    CHECK(e.seed == 99);
    CHECK(e.slot_limit == 5000);
    REQUIRE(e.adversary.budget.has_value());
    CHECK(*e.adversary.budget == 512);
}
