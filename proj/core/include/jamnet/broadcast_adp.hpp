#pragma once

#include <cstdint>

#include "jamnet/radio.hpp"

namespace jamnet {

/// Epoch schedule of the known-n broadcaster: epoch i runs
/// ceil(a * 4^i * i * lg^2 n) slots at working probability sqrt(C/n) / 2^i.
struct AdpSchedule {
    int epoch = 0;
    std::uint64_t slots = 0;
    double p = 0.0;
    int first_epoch = 0;
};

/// First epoch index: 2 + ceil(max{lg sqrt(n/C), lg sqrt(C/n)}). Guarantees
/// p <= 1/2 and p <= C/(4n) from the very first epoch.
int adp_first_epoch(std::uint64_t n, std::uint32_t channels);

/// Throws std::invalid_argument if epoch < adp_first_epoch(n, C) or inputs
/// are out of range (n >= 2, C >= 1, a >= 1).
AdpSchedule adp_schedule(int epoch, std::uint64_t n, std::uint32_t channels, double a);

struct AdpState {
    bool informed = false;
    int epoch = 0;
    std::uint64_t silent_count = 0;  // N_c within the current epoch
    std::uint64_t epoch_slot = 0;    // slots consumed in the current epoch
};

struct AdpEpochDecision {
    bool halt = false;
    AdpState next;  // meaningful only when !halt
};

/// End-of-epoch rule: halt iff silent_count >= R*p/2 (boundary inclusive);
/// otherwise reset the silence counter and move to epoch + 1.
AdpEpochDecision adp_epoch_end(const AdpState& state, std::uint64_t epoch_slots, double p);

/// Node automaton. All nodes share the global slot clock, so epoch
/// boundaries land on the same slots for everyone.
class AdpNode {
public:
    AdpNode(std::uint64_t n, std::uint32_t channels, double a, bool is_source);

    double working_probability() const { return halted_ ? 0.0 : sched_.p; }
    bool informed() const { return state_.informed; }
    bool halted() const { return halted_; }

    /// Feedback of a slot in which this node listened.
    void on_feedback(const Feedback& fb);

    /// Advances the epoch clock; applies the halting rule at epoch ends.
    /// Returns true exactly when the node halts on this boundary.
    bool on_slot_end();

    const AdpState& state() const { return state_; }
    std::uint64_t epoch_slots() const { return sched_.slots; }

private:
    std::uint64_t n_;
    std::uint32_t channels_;
    double a_;
    AdpSchedule sched_;
    AdpState state_;
    bool halted_ = false;
};

}  // namespace jamnet
