#include "jamnet/jam_classify.hpp"

#include <stdexcept>

namespace jamnet {

bool compare_fraction(std::uint64_t lhs_num, std::uint64_t lhs_den, Cmp cmp, const Ratio& r) {
    // lhs_num/lhs_den vs r.num/r.den, exact in 128-bit.
    const unsigned __int128 left = static_cast<unsigned __int128>(lhs_num) * r.den;
    const unsigned __int128 right = static_cast<unsigned __int128>(r.num) * lhs_den;
    switch (cmp) {
        case Cmp::GT: return left > right;
        case Cmp::GE: return left >= right;
        case Cmp::LT: return left < right;
        case Cmp::LE: return left <= right;
    }
    return false;
}

Cmp negate_cmp(Cmp cmp) {
    switch (cmp) {
        case Cmp::GT: return Cmp::LE;
        case Cmp::GE: return Cmp::LT;
        case Cmp::LT: return Cmp::GE;
        case Cmp::LE: return Cmp::GT;
    }
    return Cmp::GE;
}

Cmp complement_cmp(Cmp cmp) {
    switch (cmp) {
        case Cmp::GT: return Cmp::LT;
        case Cmp::GE: return Cmp::LE;
        case Cmp::LT: return Cmp::GT;
        case Cmp::LE: return Cmp::GE;
    }
    return Cmp::GE;
}

Ratio one_minus(const Ratio& r) {
    if (r.num > r.den) throw std::invalid_argument("one_minus: ratio above 1");
    return Ratio{r.den - r.num, r.den};
}

bool slot_matches(std::uint32_t unjammed, std::uint32_t channels, Cmp cmp_x, const Ratio& x) {
    return compare_fraction(unjammed, channels, cmp_x, x);
}

bool classify_jamming(std::span<const std::uint32_t> unjammed_counts, std::uint32_t channels,
                      const JamSeverityEvent& event) {
    if (unjammed_counts.empty()) throw std::invalid_argument("classify_jamming: empty window");
    std::uint64_t matching = 0;
    for (std::uint32_t q : unjammed_counts)
        if (slot_matches(q, channels, event.cmp_x, event.x)) matching += 1;
    return compare_fraction(matching, unjammed_counts.size(), event.cmp_y, event.y);
}

bool classify_jamming(std::span<const JamSet> window, const JamSeverityEvent& event) {
    if (window.empty()) throw std::invalid_argument("classify_jamming: empty window");
    std::vector<std::uint32_t> counts;
    counts.reserve(window.size());
    for (const JamSet& q : window) counts.push_back(q.unjammed_count());
    return classify_jamming(counts, window.front().channel_count(), event);
}

PhaseJamming classify_phase(std::span<const std::uint32_t> step1,
                            std::span<const std::uint32_t> step2,
                            std::span<const std::uint32_t> step3, std::uint32_t channels) {
    const JamSeverityEvent weak{Cmp::GE, Ratio{95, 100}, Cmp::GE, Ratio{95, 100}};
    const bool all_weak = classify_jamming(step1, channels, weak) &&
                          classify_jamming(step2, channels, weak) &&
                          classify_jamming(step3, channels, weak);
    return all_weak ? PhaseJamming::WeaklyJammed : PhaseJamming::StronglyJammed;
}

bool super_epoch_weakly_jammed(std::span<const PhaseJamming> phases) {
    if (phases.empty()) throw std::invalid_argument("super_epoch_weakly_jammed: no phases");
    std::uint64_t weak = 0;
    for (PhaseJamming p : phases)
        if (p == PhaseJamming::WeaklyJammed) weak += 1;
    return 2 * weak >= phases.size();
}

}  // namespace jamnet
