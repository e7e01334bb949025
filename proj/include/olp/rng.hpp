#ifndef OLP_RNG_HPP
#define OLP_RNG_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <string_view>

namespace olp {

/// Identifies the generator and seeding scheme fixed for this repository.
/// Recorded in experiment output so results can be tied to the exact stream.
inline constexpr std::string_view kRngId = "xoshiro256**/splitmix64-streams-v1";

/// Default master seed used by the CLI when --seed is not given.
/// A fixed constant (never wall clock) so bare invocations are reproducible.
inline constexpr std::uint64_t kDefaultMasterSeed = 1000003;

/// A (master seed, stream id) pair. Identical pairs yield identical byte
/// streams; distinct stream ids under one master give independent streams.
/// The experiment runner uses the trial index as the stream id.
struct RngSeed {
    std::uint64_t master = kDefaultMasterSeed;
    std::uint64_t stream = 0;
};

/// SplitMix64 step; also used as the seed-mixing finalizer.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// The fixed mixing function from (master, stream) to the 64-bit value that
/// seeds a trial's engine. This is the value reported as "seed" in records.
inline std::uint64_t derive_seed(RngSeed seed) {
    std::uint64_t s = seed.stream;
    std::uint64_t mixed = seed.master ^ splitmix64(s);
    return splitmix64(mixed);
}

/// xoshiro256** engine seeded through splitmix64 from an RngSeed.
class Rng {
public:
    explicit Rng(RngSeed seed) {
        std::uint64_t s = derive_seed(seed);
        for (auto& w : state_) w = splitmix64(s);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1), 53 random bits.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform01() < p; }

    /// Unbiased uniform integer in [0, bound). bound must be > 0.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const auto wide =
                static_cast<unsigned __int128>(next_u64()) * bound;
            if (static_cast<std::uint64_t>(wide) >= threshold)
                return static_cast<std::uint64_t>(wide >> 64);
        }
    }

    /// Standard normal via Box-Muller (two uniforms per draw).
    double normal() {
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * 3.14159265358979323846 * u2);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
};

} // namespace olp

#endif
