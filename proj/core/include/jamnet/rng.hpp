#pragma once

#include <cstdint>

namespace jamnet {

/// splitmix64 finalizer. Bijective on 64-bit words; the workhorse behind
/// every random draw in the simulator.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
}

inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ull;

/// Key for the (seed, stream, slot) cell of the counter-based generator.
/// Every node gets one independent stream per slot, so an adaptive adversary
/// cannot perturb the ordering of anybody's randomness.
constexpr std::uint64_t derive_key(std::uint64_t seed, std::uint64_t stream,
                                   std::uint64_t slot) noexcept {
    return mix64(mix64(seed + kGoldenGamma * (stream + 1)) + kGoldenGamma * (slot + 1));
}

/// Counter-based random stream: stateless key + draw counter. Equal keys and
/// equal draw indices give equal outputs, independent of anything else that
/// happened in the execution.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream, std::uint64_t slot) noexcept
        : key_(derive_key(seed, stream, slot)) {}

    static RngStream from_key(std::uint64_t key) noexcept { return RngStream(key); }

    std::uint64_t next_u64() noexcept { return mix64(key_ + (++counter_) * kGoldenGamma); }

    /// Uniform double in [0, 1), 53-bit resolution.
    double next_unit() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n). Multiply-shift on 32 bits; bias is at most
    /// n / 2^32, far below every tolerance used in this project.
    std::uint32_t next_below(std::uint32_t n) noexcept {
        const std::uint64_t x = next_u64() & 0xffffffffull;
        return static_cast<std::uint32_t>((x * n) >> 32);
    }

    bool next_bernoulli(double p) noexcept { return next_unit() < p; }

private:
    explicit RngStream(std::uint64_t key) noexcept : key_(key) {}

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// Stream ids. Node u uses stream u; the adversary's own randomness lives in
/// a reserved stream far away from any realistic node count.
inline constexpr std::uint64_t kAdversaryStream = 0x8000000000000001ull;

/// Splitter for deriving per-run seeds from a base seed. Documented contract:
/// run k of a batch uses mix64(base + (k + 1) * golden-gamma), so serial and
/// parallel batch execution see identical seeds.
constexpr std::uint64_t split_seed(std::uint64_t base, std::uint64_t index) noexcept {
    return mix64(base + kGoldenGamma * (index + 1));
}

}  // namespace jamnet
