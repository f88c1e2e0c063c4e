#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "jamnet/rng.hpp"

namespace jamnet {

enum class Action : std::uint8_t { Send, Listen, Idle };

/// Broadcast content: the message itself, or the beacon an uninformed sender
/// transmits in its place.
enum class Payload : std::uint8_t { Msg, Beacon };

/// One node's (channel, action) pair for one slot. Channels are 1-based and
/// always in [1, C]; for Idle the channel is inert. Payload is meaningful
/// only when action == Send.
struct SlotBehavior {
    std::uint32_t channel = 1;
    Action action = Action::Idle;
    Payload payload = Payload::Beacon;

    bool operator==(const SlotBehavior&) const = default;
};

/// What a listening node hears. Senders and idlers receive nothing, which the
/// engine models as an empty optional. A single Noise variant covers both
/// collisions and jamming: nodes cannot tell the two apart.
struct Feedback {
    enum class Kind : std::uint8_t { Silence, Received, Noise };
    Kind kind = Kind::Silence;
    Payload payload = Payload::Beacon;  // set when kind == Received

    bool operator==(const Feedback&) const = default;

    static Feedback silence() { return {Kind::Silence, Payload::Beacon}; }
    static Feedback noise() { return {Kind::Noise, Payload::Beacon}; }
    static Feedback received(Payload p) { return {Kind::Received, p}; }
};

/// The set of channels NOT jammed in a slot. Eve is charged one unit per
/// jammed channel, i.e. C - unjammed_count() for the slot.
class JamSet {
public:
    explicit JamSet(std::uint32_t channels, bool unjammed = true)
        : mask_(channels, unjammed ? 1 : 0),
          unjammed_count_(unjammed ? channels : 0) {}

    std::uint32_t channel_count() const { return static_cast<std::uint32_t>(mask_.size()); }
    std::uint32_t unjammed_count() const { return unjammed_count_; }
    std::uint32_t jammed_count() const { return channel_count() - unjammed_count_; }

    bool is_unjammed(std::uint32_t channel) const { return mask_[channel - 1] != 0; }

    void set_unjammed(std::uint32_t channel, bool unjammed) {
        std::uint8_t& cell = mask_[channel - 1];
        if (cell != static_cast<std::uint8_t>(unjammed)) {
            cell = static_cast<std::uint8_t>(unjammed);
            unjammed_count_ += unjammed ? 1u : -1u;
        }
    }

    void reset(bool unjammed) {
        for (auto& cell : mask_) cell = unjammed ? 1 : 0;
        unjammed_count_ = unjammed ? channel_count() : 0;
    }

    std::vector<std::uint32_t> unjammed_indices() const {
        std::vector<std::uint32_t> out;
        out.reserve(unjammed_count_);
        for (std::uint32_t ch = 1; ch <= channel_count(); ++ch)
            if (mask_[ch - 1]) out.push_back(ch);
        return out;
    }

    static JamSet from_unjammed(std::uint32_t channels, std::span<const std::uint32_t> unjammed) {
        JamSet q(channels, false);
        for (std::uint32_t ch : unjammed) q.set_unjammed(ch, true);
        return q;
    }

    bool operator==(const JamSet&) const = default;

private:
    std::vector<std::uint8_t> mask_;  // 1 = unjammed
    std::uint32_t unjammed_count_;
};

/// Draws one slot behavior from the three-way categorical: send with
/// probability p, listen with probability p, idle otherwise. The channel is
/// uniform on [1, C] even for Idle. Informed senders carry Msg, uninformed
/// ones carry Beacon. Consumes exactly one stream draw.
///
/// Throws std::invalid_argument if 2p > 1 or C == 0.
SlotBehavior draw_behavior(RngStream& rng, double p, std::uint32_t channels, bool informed);

/// Per-channel tallies reused across slots by the hot loop.
struct ResolveScratch {
    std::vector<std::uint32_t> senders;   // index 0 unused; 1..C
    std::vector<Payload> payload;         // payload of the last sender seen

    void ensure(std::uint32_t channels) {
        if (senders.size() < channels + 1u) {
            senders.assign(channels + 1u, 0);
            payload.assign(channels + 1u, Payload::Beacon);
        }
    }
};

/// Channel feedback for every node, empty for non-listeners. Pure function of
/// (behaviors, jam): a jammed channel gives Noise, an unjammed channel gives
/// Silence for zero senders, the unique payload for one sender, Noise for two
/// or more.
std::vector<std::optional<Feedback>> resolve_slot(std::span<const SlotBehavior> behaviors,
                                                  const JamSet& jam, std::uint32_t channels);

/// Allocation-free variant backing both resolve_slot and the engine loop.
void resolve_slot_into(std::span<const SlotBehavior> behaviors, const JamSet& jam,
                       std::uint32_t channels, ResolveScratch& scratch,
                       std::vector<std::optional<Feedback>>& out);

}  // namespace jamnet
