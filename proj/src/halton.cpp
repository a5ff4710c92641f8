#include "swarmsched/halton.hpp"

#include <stdexcept>

namespace swarmsched {

std::vector<std::uint64_t> first_primes(std::size_t count) {
    std::vector<std::uint64_t> primes;
    primes.reserve(count);
    std::uint64_t candidate = 2;
    while (primes.size() < count) {
        bool is_prime = true;
        for (std::uint64_t p : primes) {
            if (p * p > candidate) break;
            if (candidate % p == 0) { is_prime = false; break; }
        }
        if (is_prime) primes.push_back(candidate);
        candidate += (candidate == 2) ? 1 : 2;
    }
    return primes;
}

HaltonConfig HaltonConfig::for_dims(std::size_t dims, double lb, double ub) {
    if (!(lb < ub))
        throw std::invalid_argument("HaltonConfig: lb must be < ub");
    HaltonConfig cfg;
    cfg.dims = dims;
    cfg.bases = first_primes(dims);
    cfg.lb = lb;
    cfg.ub = ub;
    return cfg;
}

double radical_inverse(std::uint64_t index, std::uint64_t base) {
    double result = 0.0;
    double digit_weight = 1.0 / static_cast<double>(base);
    while (index > 0) {
        result += static_cast<double>(index % base) * digit_weight;
        index /= base;
        digit_weight /= static_cast<double>(base);
    }
    return result;
}

Position halton_point(std::uint64_t index, const HaltonConfig& cfg) {
    Position p(cfg.dims);
    for (std::size_t d = 0; d < cfg.dims; ++d)
        p[d] = cfg.lb + radical_inverse(index, cfg.bases[d]) * (cfg.ub - cfg.lb);
    return p;
}

InitialPopulations init_populations(std::size_t pop_size, const HaltonConfig& cfg) {
    InitialPopulations pops;
    pops.whales.reserve(pop_size);
    pops.seagulls.reserve(pop_size);
    for (std::size_t i = 0; i < pop_size; ++i)
        pops.whales.push_back(halton_point(i + 1, cfg));
    for (std::size_t i = 0; i < pop_size; ++i)
        pops.seagulls.push_back(halton_point(i + 1 + pop_size, cfg));
    return pops;
}

} // namespace swarmsched
