#pragma once

// Reference oracles for the acceptance suite and property tests. Everything
// here is deliberately independent of the engine code paths it is used to
// check: the resolver below is a naive per-listener scan, and the probability
// oracles enumerate joint outcomes in exact integer arithmetic.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "jamnet/adversary.hpp"
#include "jamnet/radio.hpp"

namespace jamnet::verify {

/// Straight-line feedback resolution: for every listener, scan all nodes.
std::vector<std::optional<Feedback>> reference_resolve(std::span<const SlotBehavior> behaviors,
                                                       const JamSet& jam,
                                                       std::uint32_t channels);

/// Profile with probabilities on the fixed grid p = k/256, k <= 128. All
/// joint-outcome probabilities then have denominator (256*C)^n, which fits
/// comfortably in 128-bit integers for n <= 6, C <= 3.
struct ExactProfile {
    std::uint32_t channels = 1;
    struct Node {
        std::uint32_t k = 0;  // p = k / 256
        bool informed = false;
    };
    std::vector<Node> nodes;

    ProbabilityProfile to_profile() const;
    std::uint64_t base() const { return 256ull * channels; }
};

/// Exact probability as numerator over base()^power.
struct ExactFraction {
    unsigned __int128 num = 0;
    int power = 0;  // denominator exponent

    double to_double(std::uint64_t base) const;
    bool operator==(const ExactFraction&) const = default;
};

/// Closed-form silence probability for listener u on an unjammed channel,
/// evaluated in exact integers: prod_{v != u} (1 - p_v/C).
ExactFraction exact_silence(const ExactProfile& profile, std::size_t node);

/// Closed-form message probability, exact.
ExactFraction exact_message(const ExactProfile& profile, std::size_t node);

/// Closed-form channel success probability, exact.
ExactFraction exact_success(const ExactProfile& profile, SuccessScope scope);

/// The same three quantities by brute-force enumeration of every joint
/// (channel, action) assignment.
ExactFraction brute_silence(const ExactProfile& profile, std::size_t node, std::uint32_t channel);
ExactFraction brute_message(const ExactProfile& profile, std::size_t node, std::uint32_t channel);
ExactFraction brute_success(const ExactProfile& profile, std::uint32_t channel, SuccessScope scope);

/// Upper critical value of the chi-square distribution (Wilson-Hilferty).
double chi_square_critical(int dof, double significance);

}  // namespace jamnet::verify
