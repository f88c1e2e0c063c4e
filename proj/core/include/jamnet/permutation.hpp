#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "jamnet/radio.hpp"

namespace jamnet {

/// Channel permutation induced by an unjammed set q: position k <= |q| maps
/// to the k-th smallest element of q, positions above |q| map to the
/// remaining channels in ascending order. For C=5, q={2,4} this permutes
/// <1,2,3,4,5> to <2,4,1,3,5>.
class ChannelPermutation {
public:
    static ChannelPermutation from_unjammed(const JamSet& q);
    static ChannelPermutation identity(std::uint32_t channels);

    std::uint32_t apply(std::uint32_t channel) const { return mapping_[channel - 1]; }
    std::uint32_t size() const { return static_cast<std::uint32_t>(mapping_.size()); }

    ChannelPermutation inverted() const;

    /// 1-based table: mapping()[k-1] is the image of channel k.
    const std::vector<std::uint32_t>& mapping() const { return mapping_; }

    JamSet apply_to(const JamSet& q) const;

private:
    std::vector<std::uint32_t> mapping_;
};

/// Lift of the permutation to joint behavior: every node's channel moves
/// through pi_q, actions and payloads stay put.
std::vector<SlotBehavior> permute_behavior(const JamSet& q, std::span<const SlotBehavior> behavior);
std::vector<SlotBehavior> permute_behavior(const ChannelPermutation& pi,
                                           std::span<const SlotBehavior> behavior);

}  // namespace jamnet
