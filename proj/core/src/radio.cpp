#include "jamnet/radio.hpp"

#include <cmath>
#include <stdexcept>

namespace jamnet {

SlotBehavior draw_behavior(RngStream& rng, double p, std::uint32_t channels, bool informed) {
    if (channels == 0) throw std::invalid_argument("draw_behavior: channel count must be >= 1");
    if (!(p >= 0.0) || 2.0 * p > 1.0)
        throw std::invalid_argument("draw_behavior: need 0 <= p <= 1/2");

    const std::uint64_t word = rng.next_u64();
    const std::uint64_t lo = word & 0xffffffffull;
    const std::uint64_t hi = word >> 32;

    SlotBehavior b;
    b.channel = 1u + static_cast<std::uint32_t>((lo * channels) >> 32);

    // Thresholds on 32-bit resolution; exact at the p = 1/2 boundary.
    const std::uint64_t send_cut = static_cast<std::uint64_t>(p * 4294967296.0);
    const std::uint64_t listen_cut = static_cast<std::uint64_t>(2.0 * p * 4294967296.0);
    if (hi < send_cut) {
        b.action = Action::Send;
        b.payload = informed ? Payload::Msg : Payload::Beacon;
    } else if (hi < listen_cut) {
        b.action = Action::Listen;
    } else {
        b.action = Action::Idle;
    }
    return b;
}

void resolve_slot_into(std::span<const SlotBehavior> behaviors, const JamSet& jam,
                       std::uint32_t channels, ResolveScratch& scratch,
                       std::vector<std::optional<Feedback>>& out) {
    scratch.ensure(channels);
    for (std::uint32_t ch = 1; ch <= channels; ++ch) scratch.senders[ch] = 0;

    for (const SlotBehavior& b : behaviors) {
        if (b.action == Action::Send) {
            scratch.senders[b.channel] += 1;
            scratch.payload[b.channel] = b.payload;
        }
    }

    out.assign(behaviors.size(), std::nullopt);
    for (std::size_t u = 0; u < behaviors.size(); ++u) {
        const SlotBehavior& b = behaviors[u];
        if (b.action != Action::Listen) continue;
        if (!jam.is_unjammed(b.channel)) {
            out[u] = Feedback::noise();
        } else if (scratch.senders[b.channel] == 0) {
            out[u] = Feedback::silence();
        } else if (scratch.senders[b.channel] == 1) {
            out[u] = Feedback::received(scratch.payload[b.channel]);
        } else {
            out[u] = Feedback::noise();
        }
    }
}

std::vector<std::optional<Feedback>> resolve_slot(std::span<const SlotBehavior> behaviors,
                                                  const JamSet& jam, std::uint32_t channels) {
    ResolveScratch scratch;
    std::vector<std::optional<Feedback>> out;
    resolve_slot_into(behaviors, jam, channels, scratch, out);
    return out;
}

}  // namespace jamnet
