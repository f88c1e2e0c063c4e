#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "jamnet/engine.hpp"

namespace jamnet {

/// Flat key=value configuration with # comments. Keys:
///   protocol      adp | advadp                       (required)
///   n             node count, >= 2                   (required)
///   C             channel count, >= 1                (required)
///   adversary     nojam | fullprefix | oblivious | randombudgeted | thresholds
///                                                    (required)
///   budget        single energy budget T
///   budgets       comma-separated budget sweep
///   density       RandomBudgeted per-channel probability in [0, 1]
///   schedule_file oblivious jam schedule path
///   source_only   thresholds success scope (0/1)
///   seeds         number of runs per budget (derived from seed)
///   seed_list     explicit comma-separated run seeds
///   seed          base seed (env JAMNET_SEED overrides)
///   a             schedule constant (default 2 for adp, 1 for advadp)
///   b             phase multiplier, fixed at 20
///   slot_limit    default 10000000
///   trace_mode    compact | full
///   output_dir    default "out"
struct ExperimentConfig {
    ProtocolConfig::Kind protocol = ProtocolConfig::Kind::Adp;
    std::uint64_t n = 0;
    std::uint32_t channels = 0;
    AdversarySpec::Kind adversary = AdversarySpec::Kind::NoJam;
    std::vector<std::uint64_t> budgets;     // 0 entries only for nojam/oblivious
    double density = 0.5;
    std::string schedule_file;
    bool source_only = false;
    std::uint64_t seeds = 0;                // used when seed_list is empty
    std::vector<std::uint64_t> seed_list;
    std::uint64_t base_seed = 1;
    double a = 0.0;                          // 0 = protocol default
    int b = 20;
    std::uint64_t slot_limit = 10'000'000;
    TraceMode trace_mode = TraceMode::Compact;
    std::string output_dir = "out";

    double effective_a() const {
        if (a > 0.0) return a;
        return protocol == ProtocolConfig::Kind::Adp ? 2.0 : 1.0;
    }
    std::vector<std::uint64_t> run_seeds() const;
};

class ConfigError : public std::runtime_error {
public:
    enum class Kind : std::uint8_t { UnknownKey, MissingKey, OutOfRange, BadValue };

    ConfigError(Kind kind, std::string field, const std::string& message)
        : std::runtime_error(message), kind_(kind), field_(std::move(field)) {}

    Kind kind() const { return kind_; }
    const std::string& field() const { return field_; }

private:
    Kind kind_;
    std::string field_;
};

/// Parses and validates; every rejection names the offending field.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);

/// FNV-1a digest of the canonical key=value form; lands in every trace.
std::string config_digest(const ExperimentConfig& config);

/// Engine configuration for one run of the experiment grid.
EngineConfig engine_config(const ExperimentConfig& config, std::uint64_t budget,
                           std::uint64_t seed);

}  // namespace jamnet
