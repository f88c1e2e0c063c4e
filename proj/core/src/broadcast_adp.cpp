#include "jamnet/broadcast_adp.hpp"

#include <cmath>
#include <stdexcept>

namespace jamnet {

int adp_first_epoch(std::uint64_t n, std::uint32_t channels) {
    if (n < 2) throw std::invalid_argument("adp_first_epoch: n must be >= 2");
    if (channels == 0) throw std::invalid_argument("adp_first_epoch: C must be >= 1");
    const double nn = static_cast<double>(n);
    const double cc = static_cast<double>(channels);
    const double lg_up = std::log2(std::sqrt(nn / cc));
    const double lg_down = std::log2(std::sqrt(cc / nn));
    return 2 + static_cast<int>(std::ceil(std::max(lg_up, lg_down)));
}

AdpSchedule adp_schedule(int epoch, std::uint64_t n, std::uint32_t channels, double a) {
    if (a < 1.0) throw std::invalid_argument("adp_schedule: a must be >= 1");
    const int first = adp_first_epoch(n, channels);
    if (epoch < first) throw std::invalid_argument("adp_schedule: epoch below the first epoch index");

    const double lg_n = std::log2(static_cast<double>(n));
    const double raw = a * std::pow(4.0, epoch) * static_cast<double>(epoch) * lg_n * lg_n;

    AdpSchedule s;
    s.epoch = epoch;
    s.slots = static_cast<std::uint64_t>(std::ceil(raw));
    s.p = std::sqrt(static_cast<double>(channels) / static_cast<double>(n)) / std::exp2(epoch);
    s.first_epoch = first;
    return s;
}

AdpEpochDecision adp_epoch_end(const AdpState& state, std::uint64_t epoch_slots, double p) {
    AdpEpochDecision d;
    const double threshold = static_cast<double>(epoch_slots) * p / 2.0;
    if (static_cast<double>(state.silent_count) >= threshold) {
        d.halt = true;
        return d;
    }
    d.halt = false;
    d.next = state;
    d.next.epoch = state.epoch + 1;
    d.next.silent_count = 0;
    d.next.epoch_slot = 0;
    return d;
}

AdpNode::AdpNode(std::uint64_t n, std::uint32_t channels, double a, bool is_source)
    : n_(n), channels_(channels), a_(a), sched_(adp_schedule(adp_first_epoch(n, channels), n, channels, a)) {
    state_.informed = is_source;
    state_.epoch = sched_.epoch;
}

void AdpNode::on_feedback(const Feedback& fb) {
    if (halted_) return;
    if (fb.kind == Feedback::Kind::Silence) {
        state_.silent_count += 1;
    } else if (fb.kind == Feedback::Kind::Received && fb.payload == Payload::Msg) {
        state_.informed = true;
    }
}

bool AdpNode::on_slot_end() {
    if (halted_) return false;
    state_.epoch_slot += 1;
    if (state_.epoch_slot < sched_.slots) return false;

    AdpEpochDecision d = adp_epoch_end(state_, sched_.slots, sched_.p);
    if (d.halt) {
        halted_ = true;
        return true;
    }
    state_ = d.next;
    sched_ = adp_schedule(state_.epoch, n_, channels_, a_);
    return false;
}

}  // namespace jamnet
