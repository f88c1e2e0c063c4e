#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "jamnet/radio.hpp"

namespace jamnet {

enum class TraceMode : std::uint8_t { Compact, Full };

/// One slot of a full-mode trace. Energy fields are cumulative through the
/// end of the slot.
struct SlotRecord {
    std::uint64_t slot = 0;
    std::vector<std::uint32_t> jam_unjammed;
    std::vector<SlotBehavior> behaviors;
    std::vector<std::optional<Feedback>> feedback;
    std::vector<std::uint64_t> energy_nodes;
    std::uint64_t eve_spend = 0;
};

/// One scheduling era (epoch for the known-n protocol; a step for the
/// unknown-n protocol) of a compact-mode trace.
struct EraRecord {
    std::string label;
    std::uint64_t start_slot = 0;
    std::uint64_t slots = 0;
    std::uint64_t eve_spend = 0;  // cumulative at era end
    std::uint32_t informed = 0;
    std::uint32_t halted = 0;
    bool partial = false;  // cut off by the slot limit
};

struct NodeOutcome {
    std::optional<std::uint64_t> halted_at;
    bool informed = false;
    std::uint64_t energy = 0;
};

/// Counters for the protocol-level assertions checked during a run.
struct TraceStats {
    std::uint64_t p_ratio_violations = 0;       // working-probability ratio outside [1/2, 2]
    std::uint64_t helper_transitions = 0;
    std::uint64_t bad_estimate_transitions = 0;  // helper with n_u outside [n/256, 4n]
    std::uint64_t halt_before_helper = 0;        // halt while someone is neither helper nor halted
    std::uint64_t halt_while_uninformed = 0;     // halt while any node lacks the message
};

struct ExecutionTrace {
    std::uint64_t n = 0;
    std::uint32_t channels = 0;
    std::uint64_t seed = 0;
    std::string config_digest;

    std::vector<SlotRecord> slots;  // full mode only
    std::vector<EraRecord> eras;    // compact mode only

    std::vector<NodeOutcome> outcome;
    std::uint64_t eve_spend = 0;
    std::uint64_t slots_run = 0;
    bool limit_exhausted = false;

    TraceStats stats;

    bool all_informed() const {
        for (const auto& o : outcome)
            if (!o.informed) return false;
        return true;
    }
    bool all_halted() const {
        for (const auto& o : outcome)
            if (!o.halted_at) return false;
        return true;
    }
    std::uint64_t max_node_energy() const {
        std::uint64_t m = 0;
        for (const auto& o : outcome) m = std::max(m, o.energy);
        return m;
    }
    double mean_node_energy() const {
        if (outcome.empty()) return 0.0;
        double sum = 0.0;
        for (const auto& o : outcome) sum += static_cast<double>(o.energy);
        return sum / static_cast<double>(outcome.size());
    }
};

/// JSONL serialization: one slot record (full mode) or one era summary
/// (compact mode) per line, outcome block last.
void write_trace_jsonl(const ExecutionTrace& trace, TraceMode mode, std::ostream& out);
std::string trace_to_jsonl(const ExecutionTrace& trace, TraceMode mode);

/// Reads a trace written in full mode (slot records present). Used by the
/// one-to-one adapter CLI.
ExecutionTrace read_trace_jsonl(std::istream& in);

}  // namespace jamnet
