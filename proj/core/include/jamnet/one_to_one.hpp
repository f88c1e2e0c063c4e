#pragma once

#include <cstdint>
#include <optional>

#include "jamnet/trace.hpp"

namespace jamnet {

/// Replay of a broadcast trace as a two-party execution: Alice mirrors the
/// source node, Bob simulates all non-source nodes with as many transceivers
/// as needed. Per channel and slot, Bob listens if at least one non-source
/// node listened (one unit), relays the payload if exactly one non-source
/// node sent (one unit), and transmits noise if two or more sent (one unit).
struct TwoPartyExecution {
    std::uint64_t slots = 0;
    std::uint64_t alice_cost = 0;
    std::uint64_t bob_cost = 0;
    std::uint64_t non_source_cost = 0;  // sum of the simulated nodes' charges

    /// Slot-for-slot check: every feedback Bob's listening transceivers hear
    /// equals what the corresponding original listeners heard.
    bool outcome_identical = true;
    /// bob_cost <= non_source_cost held throughout.
    bool cost_bound_ok = true;

    std::optional<std::uint64_t> bob_informed_at;
    std::optional<std::uint64_t> original_first_delivery;  // first slot a non-source heard Msg
};

/// Requires a full-mode trace (per-slot records). Node `source` is Alice;
/// throws std::invalid_argument when records are missing or the source index
/// is out of range.
TwoPartyExecution one_to_one_adapter(const ExecutionTrace& trace, std::size_t source = 0);

}  // namespace jamnet
