#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "jamnet/radio.hpp"

namespace jamnet {

/// Super-epoch schedule of the unknown-n broadcaster. Super-epoch i has
/// b*i phases of three steps each; every step runs ceil(a * 2^i * i^3) slots.
/// Steps one and two use the per-node working probability, step three uses
/// the fixed C^2 / 2^i.
struct AdvAdpSchedule {
    int super_epoch = 0;
    std::uint64_t step_slots = 0;
    double p0 = 0.0;       // C / 2^i
    double p_step3 = 0.0;  // C^2 / 2^i
    int phases = 0;        // b * i, b fixed at 20
    int first_super_epoch = 0;
};

inline constexpr int kAdvAdpPhaseMultiplier = 20;  // b

int advadp_first_super_epoch(std::uint32_t channels);

/// Throws std::invalid_argument if i < advadp_first_super_epoch(C) or a < 1.
AdvAdpSchedule advadp_schedule(int super_epoch, std::uint32_t channels, double a);

enum class AdvAdpStatus : std::uint8_t { Init, Helper, Halt };
enum class AdvAdpStep : std::uint8_t { One, Two, Three };

struct AdvAdpState {
    AdvAdpStatus status = AdvAdpStatus::Init;
    bool informed = false;
    int super_epoch = 0;
    int phase = 0;
    AdvAdpStep step = AdvAdpStep::One;
    double p = 0.0;        // working probability for steps one/two
    double p_step3 = 0.0;
    std::uint64_t silent_step1 = 0;
    std::uint64_t silent_step2 = 0;
    std::uint64_t silent_step3 = 0;
    std::uint64_t messages_step2 = 0;
    std::optional<double> n_estimate;  // set once, at the Init -> Helper transition
};

/// Normalizer Delta = R * p / (1 - p/C). Throws if p >= C.
double advadp_delta(std::uint64_t step_slots, double p, std::uint32_t channels);

/// Silence score of a phase: N1/Delta1 + N2/Delta2 + N3/Delta3 with
/// Delta1 = Delta2 = R*p/(1 - p/C) and Delta3 = R*p3/(1 - p3/C).
double advadp_eta(std::uint64_t silent1, std::uint64_t silent2, std::uint64_t silent3,
                  std::uint64_t step_slots, double p, double p_step3, std::uint32_t channels);

/// Feedback bookkeeping. Step one: silence counts, hearing the message
/// informs the node. Step two: silence counts, hearing the message only
/// bumps the message counter. Step three: silence counts, nothing else.
AdvAdpState advadp_feedback(AdvAdpState state, const Feedback& fb, AdvAdpStep current_step);

struct AdvAdpParams {
    std::uint32_t channels = 1;
    double a = 1.0;
    int phases_override = 0;  // 0 = the algorithm's b*i phases per super-epoch
};

/// End-of-phase transition. Computes p' = p * 2^{max(0, eta - 2.5)}, then:
///   - Init nodes with messages_step2 >= a*i^3 and eta >= 2.4 become Helper
///     and fix n_estimate = C / (p^2 * 2^i) using the pre-update p;
///   - otherwise Helper nodes with p' >= 64 * sqrt(C / (2^i * n_estimate))
///     halt (the two transitions are mutually exclusive at one boundary).
/// Counters reset, the phase index advances, and after the last phase of a
/// super-epoch p resets to C / 2^{i+1}. The stored working probability is
/// capped at 1/2 so it stays a valid send/listen probability; the halt
/// comparison uses the uncapped p'.
AdvAdpState advadp_phase_end(const AdvAdpState& state, double eta, std::uint64_t messages_step2,
                             int super_epoch, int phase, const AdvAdpParams& params);

/// Transition visible to the engine's monitors.
enum class AdvAdpTransition : std::uint8_t { None, BecameHelper, Halted };

/// Node automaton driven one slot at a time. A schedule override lets tests
/// and scaled studies shrink step lengths; the engine always uses the real
/// schedule.
class AdvAdpNode {
public:
    /// Called with 0 once for the initial super-epoch, afterwards with the
    /// concrete super-epoch index reached by the automaton.
    using ScheduleFn = std::function<AdvAdpSchedule(int super_epoch)>;

    AdvAdpNode(std::uint32_t channels, double a, bool is_source,
               ScheduleFn schedule_override = nullptr);

    double working_probability() const {
        if (state_.status == AdvAdpStatus::Halt) return 0.0;
        return state_.step == AdvAdpStep::Three ? state_.p_step3 : state_.p;
    }
    bool informed() const { return state_.informed; }
    bool halted() const { return state_.status == AdvAdpStatus::Halt; }
    AdvAdpStatus status() const { return state_.status; }

    void on_feedback(const Feedback& fb);

    /// Advances the step clock; applies step and phase boundaries.
    AdvAdpTransition on_slot_end();

    const AdvAdpState& state() const { return state_; }
    std::uint64_t step_slots() const { return sched_.step_slots; }

private:
    AdvAdpSchedule schedule_for(int super_epoch) const;

    AdvAdpParams params_;
    ScheduleFn override_;
    AdvAdpSchedule sched_;
    AdvAdpState state_;
    std::uint64_t slot_in_step_ = 0;
};

}  // namespace jamnet
