#include "jamnet/broadcast_advadp.hpp"

#include <cmath>
#include <stdexcept>

namespace jamnet {

int advadp_first_super_epoch(std::uint32_t channels) {
    if (channels == 0) throw std::invalid_argument("advadp_first_super_epoch: C must be >= 1");
    const double two_lg_c = 2.0 * std::log2(static_cast<double>(channels));
    return 20 + static_cast<int>(std::ceil(two_lg_c));
}

AdvAdpSchedule advadp_schedule(int super_epoch, std::uint32_t channels, double a) {
    if (a < 1.0) throw std::invalid_argument("advadp_schedule: a must be >= 1");
    const int first = advadp_first_super_epoch(channels);
    if (super_epoch < first)
        throw std::invalid_argument("advadp_schedule: super-epoch below the first index");

    const double i = static_cast<double>(super_epoch);
    AdvAdpSchedule s;
    s.super_epoch = super_epoch;
    s.step_slots = static_cast<std::uint64_t>(std::ceil(a * std::exp2(i) * i * i * i));
    s.p0 = static_cast<double>(channels) / std::exp2(i);
    s.p_step3 = static_cast<double>(channels) * static_cast<double>(channels) / std::exp2(i);
    s.phases = kAdvAdpPhaseMultiplier * super_epoch;
    s.first_super_epoch = first;
    return s;
}

double advadp_delta(std::uint64_t step_slots, double p, std::uint32_t channels) {
    const double c = static_cast<double>(channels);
    if (!(p < c)) throw std::invalid_argument("advadp_delta: requires p < C");
    return static_cast<double>(step_slots) * p / (1.0 - p / c);
}

double advadp_eta(std::uint64_t silent1, std::uint64_t silent2, std::uint64_t silent3,
                  std::uint64_t step_slots, double p, double p_step3, std::uint32_t channels) {
    const double delta12 = advadp_delta(step_slots, p, channels);
    const double delta3 = advadp_delta(step_slots, p_step3, channels);
    return static_cast<double>(silent1) / delta12 + static_cast<double>(silent2) / delta12 +
           static_cast<double>(silent3) / delta3;
}

AdvAdpState advadp_feedback(AdvAdpState state, const Feedback& fb, AdvAdpStep current_step) {
    switch (current_step) {
        case AdvAdpStep::One:
            if (fb.kind == Feedback::Kind::Silence) {
                state.silent_step1 += 1;
            } else if (fb.kind == Feedback::Kind::Received && fb.payload == Payload::Msg) {
                state.informed = true;
            }
            break;
        case AdvAdpStep::Two:
            if (fb.kind == Feedback::Kind::Silence) {
                state.silent_step2 += 1;
            } else if (fb.kind == Feedback::Kind::Received && fb.payload == Payload::Msg) {
                state.messages_step2 += 1;
            }
            break;
        case AdvAdpStep::Three:
            if (fb.kind == Feedback::Kind::Silence) state.silent_step3 += 1;
            break;
    }
    return state;
}

AdvAdpState advadp_phase_end(const AdvAdpState& state, double eta, std::uint64_t messages_step2,
                             int super_epoch, int phase, const AdvAdpParams& params) {
    const double c = static_cast<double>(params.channels);
    const double pow_i = std::exp2(super_epoch);
    const double p_next = state.p * std::exp2(std::max(0.0, eta - 2.5));

    AdvAdpState next = state;
    const double i_cubed = static_cast<double>(super_epoch) * super_epoch * super_epoch;
    if (state.status == AdvAdpStatus::Init &&
        static_cast<double>(messages_step2) >= params.a * i_cubed && eta >= 2.4) {
        next.status = AdvAdpStatus::Helper;
        next.n_estimate = c / (state.p * state.p * pow_i);
    } else if (state.status == AdvAdpStatus::Helper &&
               p_next >= 64.0 * std::sqrt(c / (pow_i * *state.n_estimate))) {
        next.status = AdvAdpStatus::Halt;
    }

    next.silent_step1 = 0;
    next.silent_step2 = 0;
    next.silent_step3 = 0;
    next.messages_step2 = 0;
    next.step = AdvAdpStep::One;

    const int phases = params.phases_override > 0 ? params.phases_override
                                                  : kAdvAdpPhaseMultiplier * super_epoch;
    if (phase + 1 >= phases) {
        next.super_epoch = super_epoch + 1;
        next.phase = 0;
        next.p = c / std::exp2(super_epoch + 1);
        next.p_step3 = c * c / std::exp2(super_epoch + 1);
    } else {
        next.phase = phase + 1;
        next.p = std::min(p_next, 0.5);
    }
    return next;
}

AdvAdpNode::AdvAdpNode(std::uint32_t channels, double a, bool is_source, ScheduleFn schedule_override)
    : params_{channels, a}, override_(std::move(schedule_override)) {
    sched_ = override_ ? override_(0)
                       : advadp_schedule(advadp_first_super_epoch(channels), channels, a);
    state_.super_epoch = sched_.super_epoch;
    state_.p = sched_.p0;
    state_.p_step3 = sched_.p_step3;
    state_.informed = is_source;
}

AdvAdpSchedule AdvAdpNode::schedule_for(int super_epoch) const {
    if (override_) return override_(super_epoch);
    return advadp_schedule(super_epoch, params_.channels, params_.a);
}

void AdvAdpNode::on_feedback(const Feedback& fb) {
    if (halted()) return;
    state_ = advadp_feedback(state_, fb, state_.step);
}

AdvAdpTransition AdvAdpNode::on_slot_end() {
    if (halted()) return AdvAdpTransition::None;

    slot_in_step_ += 1;
    if (slot_in_step_ < sched_.step_slots) return AdvAdpTransition::None;
    slot_in_step_ = 0;

    if (state_.step == AdvAdpStep::One) {
        state_.step = AdvAdpStep::Two;
        return AdvAdpTransition::None;
    }
    if (state_.step == AdvAdpStep::Two) {
        state_.step = AdvAdpStep::Three;
        return AdvAdpTransition::None;
    }

    // End of step three: phase boundary.
    const AdvAdpStatus before = state_.status;
    const double eta = advadp_eta(state_.silent_step1, state_.silent_step2, state_.silent_step3,
                                  sched_.step_slots, state_.p, state_.p_step3, params_.channels);
    const int old_super_epoch = state_.super_epoch;
    AdvAdpParams params = params_;
    if (override_) params.phases_override = sched_.phases;
    state_ = advadp_phase_end(state_, eta, state_.messages_step2, state_.super_epoch, state_.phase,
                              params);
    if (state_.super_epoch != old_super_epoch && state_.status != AdvAdpStatus::Halt) {
        sched_ = schedule_for(state_.super_epoch);
        state_.p = sched_.p0;
        state_.p_step3 = sched_.p_step3;
    }
    if (state_.status != before) {
        return state_.status == AdvAdpStatus::Helper ? AdvAdpTransition::BecameHelper
                                                     : AdvAdpTransition::Halted;
    }
    return AdvAdpTransition::None;
}

}  // namespace jamnet
