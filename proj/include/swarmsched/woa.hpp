#ifndef SWARMSCHED_WOA_HPP
#define SWARMSCHED_WOA_HPP

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <utility>

#include "swarmsched/halton.hpp"
#include "swarmsched/rng.hpp"

namespace swarmsched {

/// Control state of the whale update at one iteration.
struct WoaParams {
    double a_coef = 2.0;      // decreases linearly 2 -> 0 across the run
    double b = 1.0;           // spiral shape constant
    std::size_t t = 0;
    std::size_t max_iter = 1;

    static double a_schedule(std::size_t t, std::size_t max_iter) {
        return 2.0 * (1.0 - static_cast<double>(t) / static_cast<double>(max_iter));
    }

    static WoaParams at_iteration(std::size_t t, std::size_t max_iter, double b = 1.0) {
        WoaParams p;
        p.a_coef = a_schedule(t, max_iter);
        p.b = b;
        p.t = t;
        p.max_iter = max_iter;
        return p;
    }
};

/// Per-step coefficients: A = 2*a*r1 - a, C = 2*r2.
inline std::pair<double, double> woa_coefficients(const WoaParams& params, Rng& rng) {
    const double r1 = rng.uniform();
    const double r2 = rng.uniform();
    return {2.0 * params.a_coef * r1 - params.a_coef, 2.0 * r2};
}

/// Shrink toward the leader: new = leader - A*|C*leader - cur| per dimension.
inline Position encircle(const Position& cur, const Position& leader, double a_vec, double c_vec) {
    if (cur.size() != leader.size())
        throw std::invalid_argument("encircle: dimension mismatch");
    Position next(cur.size());
    for (std::size_t d = 0; d < cur.size(); ++d)
        next[d] = leader[d] - a_vec * std::abs(c_vec * leader[d] - cur[d]);
    return next;
}

/// Log-spiral move around the leader: new = |leader - cur|*e^{b*l}*cos(2*pi*l) + leader.
inline Position spiral(const Position& cur, const Position& leader, double b, double l) {
    Position next(cur.size());
    const double radial = std::exp(b * l) * std::cos(2.0 * std::numbers::pi * l);
    for (std::size_t d = 0; d < cur.size(); ++d)
        next[d] = std::abs(leader[d] - cur[d]) * radial + leader[d];
    return next;
}

/// Global search referencing a random agent instead of the leader.
inline Position explore(const Position& cur, const Position& rand_agent, double a_vec, double c_vec) {
    if (cur.size() != rand_agent.size())
        throw std::invalid_argument("explore: dimension mismatch");
    Position next(cur.size());
    for (std::size_t d = 0; d < cur.size(); ++d)
        next[d] = rand_agent[d] - a_vec * std::abs(c_vec * rand_agent[d] - cur[d]);
    return next;
}

/// One whale move. Draw order: p; then either (r1, r2 [, agent index]) for
/// the p < 0.5 branch or l for the spiral branch. Replaying the stream
/// reproduces the move bit-exactly.
inline Position woa_step(const Position& cur, const Position& leader,
                         std::span<const Position> population,
                         const WoaParams& params, Rng& rng) {
    const double p = rng.uniform();
    if (p < 0.5) {
        const auto [a_vec, c_vec] = woa_coefficients(params, rng);
        if (std::abs(a_vec) < 1.0)
            return encircle(cur, leader, a_vec, c_vec);
        const std::size_t pick = rng.uniform_index(population.size());
        return explore(cur, population[pick], a_vec, c_vec);
    }
    const double l = rng.uniform(-1.0, 1.0);
    return spiral(cur, leader, params.b, l);
}

} // namespace swarmsched

#endif // SWARMSCHED_WOA_HPP
