#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace ddmol {

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes);
std::uint64_t splitmix64(std::uint64_t x);

/// Seedable random stream. Uses the fully specified mt19937_64 engine and a
/// hand-rolled uniform mapping, so sequences are identical across platforms.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : engine_(seed), seed_(seed) {}

    /// Sub-stream for one trial of one scenario. Streams for different trial
    /// indices are independent of how many trials run or in what order.
    static RngStream derive(std::uint64_t root_seed, std::string_view scenario, std::uint64_t trial);
    static std::uint64_t derive_seed(std::uint64_t root_seed, std::string_view scenario,
                                     std::uint64_t trial);

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    std::uint64_t seed() const { return seed_; }

private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
};

} // namespace ddmol
