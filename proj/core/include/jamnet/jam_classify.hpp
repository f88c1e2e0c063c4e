#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "jamnet/radio.hpp"

namespace jamnet {

/// Exact rational threshold in [0, 1]. Comparisons against channel or slot
/// fractions are done by cross-multiplication, never in floating point.
struct Ratio {
    std::uint64_t num = 0;
    std::uint64_t den = 1;
};

enum class Cmp : std::uint8_t { GT, GE, LT, LE };

/// lhs_num / lhs_den  <cmp>  r
bool compare_fraction(std::uint64_t lhs_num, std::uint64_t lhs_den, Cmp cmp, const Ratio& r);

Cmp negate_cmp(Cmp cmp);       // not(> x) = (<= x), not(< x) = (>= x), ...
Cmp complement_cmp(Cmp cmp);   // comp(> x) = (< 1-x), comp(>= x) = (<= 1-x), ...
Ratio one_minus(const Ratio& r);

/// Jamming-severity event over a window of slots: the inner comparator tests
/// the fraction of unjammed channels per slot, the outer one the fraction of
/// slots satisfying the inner test.
struct JamSeverityEvent {
    Cmp cmp_x = Cmp::GE;
    Ratio x{0, 1};
    Cmp cmp_y = Cmp::GE;
    Ratio y{0, 1};
};

bool slot_matches(std::uint32_t unjammed, std::uint32_t channels, Cmp cmp_x, const Ratio& x);

/// Evaluates the event on a window given per-slot unjammed-channel counts.
/// Throws std::invalid_argument on an empty window.
bool classify_jamming(std::span<const std::uint32_t> unjammed_counts, std::uint32_t channels,
                      const JamSeverityEvent& event);
bool classify_jamming(std::span<const JamSet> window, const JamSeverityEvent& event);

enum class PhaseJamming : std::uint8_t { WeaklyJammed, StronglyJammed };

/// A phase is weakly jammed iff each of its three steps satisfies
/// E^{>=0.95}(>=0.95): at least 95% of slots leave at least 95% of channels
/// unjammed.
PhaseJamming classify_phase(std::span<const std::uint32_t> step1,
                            std::span<const std::uint32_t> step2,
                            std::span<const std::uint32_t> step3, std::uint32_t channels);

/// A super-epoch is weakly jammed iff at least half of its phases are.
bool super_epoch_weakly_jammed(std::span<const PhaseJamming> phases);

}  // namespace jamnet
