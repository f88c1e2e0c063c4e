#include "jamnet/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace jamnet {

AnalyticProbs analytic_probs(const ProbabilityProfile& profile, std::size_t node) {
    if (node >= profile.nodes.size())
        throw std::invalid_argument("analytic_probs: node out of range");
    const double c = static_cast<double>(profile.channels);

    AnalyticProbs out;
    out.silence = 1.0;
    for (std::size_t v = 0; v < profile.nodes.size(); ++v) {
        const auto& e = profile.nodes[v];
        if (v == node || !e.active) continue;
        out.silence *= 1.0 - e.p / c;
    }
    for (std::size_t v = 0; v < profile.nodes.size(); ++v) {
        const auto& e = profile.nodes[v];
        if (v == node || !e.active || !e.informed) continue;
        double term = e.p / c;
        for (std::size_t w = 0; w < profile.nodes.size(); ++w) {
            if (w == node || w == v || !profile.nodes[w].active) continue;
            term *= 1.0 - profile.nodes[w].p / c;
        }
        out.message += term;
    }
    return out;
}

SandwichBounds analytic_bounds(const ProbabilityProfile& profile, std::size_t node) {
    if (node >= profile.nodes.size())
        throw std::invalid_argument("analytic_bounds: node out of range");
    const double c = static_cast<double>(profile.channels);

    double p_v = 0.0;
    double p_m = 0.0;
    for (const auto& e : profile.nodes) {
        if (!e.active) continue;
        p_v += e.p / c;
        if (e.informed) p_m += e.p / c;
    }
    const double p_u = profile.nodes[node].p / c;

    SandwichBounds b;
    b.silence_lo = std::exp(-2.0 * p_v);
    b.silence_hi = std::exp(-p_v) / (1.0 - p_u);
    b.message_lo = (p_m - p_u) * std::exp(-2.0 * p_v);
    b.message_hi = p_m;
    return b;
}

}  // namespace jamnet
