#include "jamnet/one_to_one.hpp"

#include <stdexcept>

namespace jamnet {

namespace {

enum class TwoPartyHear : std::uint8_t { Silence, Msg, Beacon, Noise };

TwoPartyHear from_feedback(const Feedback& fb) {
    switch (fb.kind) {
        case Feedback::Kind::Silence: return TwoPartyHear::Silence;
        case Feedback::Kind::Noise: return TwoPartyHear::Noise;
        case Feedback::Kind::Received:
            return fb.payload == Payload::Msg ? TwoPartyHear::Msg : TwoPartyHear::Beacon;
    }
    return TwoPartyHear::Noise;
}

}  // namespace

TwoPartyExecution one_to_one_adapter(const ExecutionTrace& trace, std::size_t source) {
    if (trace.slots.empty())
        throw std::invalid_argument("one_to_one_adapter: trace has no slot records (full mode required)");
    if (source >= trace.n) throw std::invalid_argument("one_to_one_adapter: source index out of range");

    const std::uint32_t channels = trace.channels;
    TwoPartyExecution out;

    std::vector<std::uint32_t> senders(channels + 1);
    std::vector<std::uint32_t> listeners(channels + 1);
    std::vector<Payload> payload(channels + 1);
    std::vector<std::uint8_t> unjammed(channels + 1);

    for (const SlotRecord& rec : trace.slots) {
        out.slots += 1;
        for (std::uint32_t ch = 1; ch <= channels; ++ch) {
            senders[ch] = 0;
            listeners[ch] = 0;
            unjammed[ch] = 0;
        }
        for (std::uint32_t ch : rec.jam_unjammed) unjammed[ch] = 1;

        const SlotBehavior& alice = rec.behaviors[source];
        if (alice.action != Action::Idle) out.alice_cost += 1;

        for (std::size_t v = 0; v < rec.behaviors.size(); ++v) {
            if (v == source) continue;
            const SlotBehavior& b = rec.behaviors[v];
            if (b.action == Action::Send) {
                senders[b.channel] += 1;
                payload[b.channel] = b.payload;
                out.non_source_cost += 1;
            } else if (b.action == Action::Listen) {
                listeners[b.channel] += 1;
                out.non_source_cost += 1;
            }
        }

        for (std::uint32_t ch = 1; ch <= channels; ++ch) {
            const bool bob_listens = listeners[ch] >= 1;
            const bool bob_relays = senders[ch] == 1;
            const bool bob_noises = senders[ch] >= 2;
            if (bob_listens) out.bob_cost += 1;
            if (bob_relays || bob_noises) out.bob_cost += 1;
            if (!bob_listens) continue;

            // Two-party resolution on this channel.
            TwoPartyHear heard;
            if (!unjammed[ch]) {
                heard = TwoPartyHear::Noise;
            } else {
                const bool alice_sends = alice.action == Action::Send && alice.channel == ch;
                const int transmitters = (alice_sends ? 1 : 0) + ((bob_relays || bob_noises) ? 1 : 0);
                if (transmitters == 0) {
                    heard = TwoPartyHear::Silence;
                } else if (transmitters >= 2 || bob_noises) {
                    heard = TwoPartyHear::Noise;
                } else if (alice_sends) {
                    heard = alice.payload == Payload::Msg ? TwoPartyHear::Msg : TwoPartyHear::Beacon;
                } else {
                    heard = payload[ch] == Payload::Msg ? TwoPartyHear::Msg : TwoPartyHear::Beacon;
                }
            }

            if (heard == TwoPartyHear::Msg && !out.bob_informed_at)
                out.bob_informed_at = rec.slot;

            // Original listeners on this channel all heard the same thing;
            // compare against each of them.
            for (std::size_t v = 0; v < rec.behaviors.size(); ++v) {
                if (v == source) continue;
                const SlotBehavior& b = rec.behaviors[v];
                if (b.action != Action::Listen || b.channel != ch) continue;
                const auto& fb = rec.feedback[v];
                if (!fb || from_feedback(*fb) != heard) out.outcome_identical = false;
                if (fb && fb->kind == Feedback::Kind::Received && fb->payload == Payload::Msg &&
                    !out.original_first_delivery)
                    out.original_first_delivery = rec.slot;
            }
        }

        if (out.bob_cost > out.non_source_cost) out.cost_bound_ok = false;
    }

    if (out.bob_informed_at != out.original_first_delivery) out.outcome_identical = false;
    return out;
}

}  // namespace jamnet
