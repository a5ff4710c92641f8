#ifndef SWARMSCHED_HALTON_HPP
#define SWARMSCHED_HALTON_HPP

#include <cstdint>
#include <vector>

namespace swarmsched {

/// A point in continuous assignment space, one coordinate per task.
using Position = std::vector<double>;

/// First `count` primes, starting at 2. One prime base per dimension.
std::vector<std::uint64_t> first_primes(std::size_t count);

struct HaltonConfig {
    std::size_t dims = 0;
    std::vector<std::uint64_t> bases; // first dims primes
    double lb = 0.0;
    double ub = 0.0;

    static HaltonConfig for_dims(std::size_t dims, double lb, double ub);
};

/// Digit-reversal radical inverse of `index` in the given prime base,
/// in [0, 1).
double radical_inverse(std::uint64_t index, std::uint64_t base);

/// Halton point scaled to [lb, ub) per dimension.
Position halton_point(std::uint64_t index, const HaltonConfig& cfg);

struct InitialPopulations {
    std::vector<Position> whales;
    std::vector<Position> seagulls;
};

/// Whale i takes sequence index i+1, seagull i takes index i+1+N, so the
/// two populations are disjoint and nobody starts at the all-lb corner.
InitialPopulations init_populations(std::size_t pop_size, const HaltonConfig& cfg);

} // namespace swarmsched

#endif // SWARMSCHED_HALTON_HPP
