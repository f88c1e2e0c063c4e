#pragma once

#include <cstddef>

#include "jamnet/adversary.hpp"

namespace jamnet {

/// Closed-form per-slot hearing probabilities for a listener on an unjammed
/// channel: silence = prod_{v != u} (1 - p_v/C), message = sum over informed
/// v != u of (p_v/C) * prod_{w != u,v} (1 - p_w/C).
struct AnalyticProbs {
    double silence = 0.0;
    double message = 0.0;
};

AnalyticProbs analytic_probs(const ProbabilityProfile& profile, std::size_t node);

/// The sandwich bounds these probabilities must satisfy, with
/// P_V = (sum_V p_v)/C and P_M = (sum over informed p_v)/C:
///   e^{-2 P_V} <= silence <= e^{-P_V} / (1 - p_u/C)
///   (P_M - p_u/C) e^{-2 P_V} <= message <= P_M
struct SandwichBounds {
    double silence_lo = 0.0;
    double silence_hi = 0.0;
    double message_lo = 0.0;
    double message_hi = 0.0;
};

SandwichBounds analytic_bounds(const ProbabilityProfile& profile, std::size_t node);

}  // namespace jamnet
