#pragma once

#include <cstdint>
#include <string>

#include "jamnet/adversary.hpp"
#include "jamnet/trace.hpp"

namespace jamnet {

struct ProtocolConfig {
    enum class Kind : std::uint8_t { Adp, AdvAdp };
    Kind kind = Kind::Adp;
    double a = 2.0;  // schedule scale constant
};

struct EngineConfig {
    ProtocolConfig protocol;
    AdversarySpec adversary;
    std::uint64_t n = 2;
    std::uint32_t channels = 1;
    std::uint64_t seed = 1;
    std::uint64_t slot_limit = 10'000'000;
    TraceMode trace_mode = TraceMode::Compact;
    std::string config_digest;
};

/// Runs one slot-synchronous execution to halt-of-all-nodes or the slot
/// limit. Per slot: the adversary picks a jam set from the full history,
/// every active node draws its behavior from its own (seed, slot, node)
/// stream, feedback is resolved and delivered, ledgers advance. The returned
/// trace is bit-identical for identical configs.
ExecutionTrace run_execution(const EngineConfig& config);

}  // namespace jamnet
