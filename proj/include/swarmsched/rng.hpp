#ifndef SWARMSCHED_RNG_HPP
#define SWARMSCHED_RNG_HPP

#include <cstdint>
#include <cstddef>

namespace swarmsched {

/// One splitmix64 mixing round.
inline std::uint64_t splitmix64_mix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Counter-based splitmix64 generator. Value semantics: copying the state
/// and replaying the draws reproduces the sequence bit-exactly.
class Rng {
public:
    explicit Rng(std::uint64_t state = 0) : state_(state) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

    /// Uniform index in [0, n). n must be >= 1.
    std::size_t uniform_index(std::size_t n) {
        return static_cast<std::size_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    std::uint64_t state() const { return state_; }

private:
    std::uint64_t state_;
};

/// Derives an independent, reproducible stream per (iteration, lane, agent)
/// triple so the outcome of a run does not depend on thread scheduling.
/// Lanes separate the consumers of randomness (whales, seagulls, baselines).
class RngPolicy {
public:
    explicit RngPolicy(std::uint64_t master_seed) : master_seed_(master_seed) {}

    Rng stream(std::uint64_t iteration, std::uint64_t lane, std::uint64_t agent) const {
        std::uint64_t s = master_seed_;
        s = splitmix64_mix(s ^ (iteration * 0xD6E8FEB86659FD93ULL));
        s = splitmix64_mix(s ^ (lane * 0xA3C59AC2F2D4417BULL));
        s = splitmix64_mix(s ^ (agent * 0x8CB92BA72F3D8DD7ULL));
        return Rng(s);
    }

    std::uint64_t master_seed() const { return master_seed_; }

private:
    std::uint64_t master_seed_;
};

namespace lanes {
inline constexpr std::uint64_t whale = 0;
inline constexpr std::uint64_t seagull = 1;
inline constexpr std::uint64_t random_search = 2;
inline constexpr std::uint64_t genetic = 3;
} // namespace lanes

} // namespace swarmsched

#endif // SWARMSCHED_RNG_HPP
