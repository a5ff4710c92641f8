#ifndef SWARMSCHED_SOA_HPP
#define SWARMSCHED_SOA_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "swarmsched/halton.hpp"
#include "swarmsched/rng.hpp"

namespace swarmsched {

/// Control state of the seagull update at one iteration.
struct SoaParams {
    double fc = 2.0;          // initial collision-avoidance weight
    std::size_t t = 0;
    std::size_t max_iter = 1;
    double u = 1.0;           // spiral shape constants
    double v = 1.0;

    /// A decreases linearly from fc to 0 across the run.
    static double a_schedule(double fc, std::size_t t, std::size_t max_iter) {
        return fc - static_cast<double>(t) * (fc / static_cast<double>(max_iter));
    }

    static SoaParams at_iteration(std::size_t t, std::size_t max_iter) {
        SoaParams p;
        p.t = t;
        p.max_iter = max_iter;
        return p;
    }
};

/// Migration distance: Ds = |A*cur + B*(best - cur)| element-wise.
inline std::vector<double> migrate(const Position& cur, const Position& best,
                                   double a_ctrl, double b_ctrl) {
    if (cur.size() != best.size())
        throw std::invalid_argument("migrate: dimension mismatch");
    std::vector<double> ds(cur.size());
    for (std::size_t d = 0; d < cur.size(); ++d)
        ds[d] = std::abs(a_ctrl * cur[d] + b_ctrl * (best[d] - cur[d]));
    return ds;
}

struct SpiralFactors {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// Spiral coordinates at a given turn angle: r = u*e^{theta*v},
/// x = r*cos(theta), y = r*sin(theta), z = r*theta.
inline SpiralFactors spiral_factors_from_theta(double theta, double u, double v) {
    const double r = u * std::exp(theta * v);
    return {r * std::cos(theta), r * std::sin(theta), r * theta};
}

/// Draws theta ~ U(0, 2*pi) and evaluates the spiral coordinates.
inline SpiralFactors spiral_factors(double u, double v, Rng& rng) {
    const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
    return spiral_factors_from_theta(theta, u, v);
}

/// Attack move: new = Ds*x*y*z + best per dimension.
inline Position attack(const std::vector<double>& ds, const Position& best,
                       const SpiralFactors& f) {
    Position next(best.size());
    const double scale = f.x * f.y * f.z;
    for (std::size_t d = 0; d < best.size(); ++d)
        next[d] = ds[d] * scale + best[d];
    return next;
}

/// One seagull move: migration toward the best, then a spiral attack.
/// Draw order: rd (for B), then theta.
inline Position soa_step(const Position& cur, const Position& best,
                         const SoaParams& params, Rng& rng) {
    const double a_ctrl = SoaParams::a_schedule(params.fc, params.t, params.max_iter);
    const double rd = rng.uniform();
    const double b_ctrl = 2.0 * a_ctrl * a_ctrl * rd;
    const std::vector<double> ds = migrate(cur, best, a_ctrl, b_ctrl);
    return attack(ds, best, spiral_factors(params.u, params.v, rng));
}

} // namespace swarmsched

#endif // SWARMSCHED_SOA_HPP
