#include "jamnet/permutation.hpp"

namespace jamnet {

ChannelPermutation ChannelPermutation::from_unjammed(const JamSet& q) {
    const std::uint32_t channels = q.channel_count();
    ChannelPermutation pi;
    pi.mapping_.reserve(channels);
    for (std::uint32_t ch = 1; ch <= channels; ++ch)
        if (q.is_unjammed(ch)) pi.mapping_.push_back(ch);
    for (std::uint32_t ch = 1; ch <= channels; ++ch)
        if (!q.is_unjammed(ch)) pi.mapping_.push_back(ch);
    return pi;
}

ChannelPermutation ChannelPermutation::identity(std::uint32_t channels) {
    ChannelPermutation pi;
    pi.mapping_.resize(channels);
    for (std::uint32_t ch = 1; ch <= channels; ++ch) pi.mapping_[ch - 1] = ch;
    return pi;
}

ChannelPermutation ChannelPermutation::inverted() const {
    ChannelPermutation inv;
    inv.mapping_.resize(mapping_.size());
    for (std::uint32_t k = 1; k <= mapping_.size(); ++k) inv.mapping_[mapping_[k - 1] - 1] = k;
    return inv;
}

JamSet ChannelPermutation::apply_to(const JamSet& q) const {
    JamSet out(q.channel_count(), false);
    for (std::uint32_t ch = 1; ch <= q.channel_count(); ++ch)
        if (q.is_unjammed(ch)) out.set_unjammed(apply(ch), true);
    return out;
}

std::vector<SlotBehavior> permute_behavior(const ChannelPermutation& pi,
                                           std::span<const SlotBehavior> behavior) {
    std::vector<SlotBehavior> out(behavior.begin(), behavior.end());
    for (SlotBehavior& b : out) b.channel = pi.apply(b.channel);
    return out;
}

std::vector<SlotBehavior> permute_behavior(const JamSet& q, std::span<const SlotBehavior> behavior) {
    return permute_behavior(ChannelPermutation::from_unjammed(q), behavior);
}

}  // namespace jamnet
