#include <cmath>

#include "doctest.h"
#include "swarmsched/rng.hpp"
#include "swarmsched/soa.hpp"

using namespace swarmsched;

TEST_CASE("migrate") {
    CHECK(migrate({2.0}, {5.0}, 1.0, 2.0) == std::vector<double>{8.0});
    CHECK(migrate({3.0, -4.0}, {6.0, 0.0}, 0.0, 1.0) == std::vector<double>{3.0, 4.0});
    CHECK(migrate({-7.0}, {-7.0}, 1.0, 0.3) == std::vector<double>{7.0}); // |cur| when at the best
    CHECK_THROWS(migrate({1.0}, {1.0, 2.0}, 1.0, 1.0));
}

TEST_CASE("spiral factors at fixed angles") {
    const SpiralFactors at_zero = spiral_factors_from_theta(0.0, 1.0, 1.0);
    CHECK(at_zero.x == 1.0);
    CHECK(at_zero.y == 0.0);
    CHECK(at_zero.z == 0.0);

    const SpiralFactors quarter = spiral_factors_from_theta(std::numbers::pi / 2.0, 1.0, 0.0);
    CHECK(quarter.x == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(quarter.y == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(quarter.z == doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-12));
}

TEST_CASE("x^2 + y^2 equals r^2 for every draw") {
    Rng rng(2024);
    for (int i = 0; i < 1000; ++i) {
        Rng replay = rng;
        const SpiralFactors f = spiral_factors(1.0, 1.0, rng);
        const double theta = replay.uniform(0.0, 2.0 * std::numbers::pi);
        const double r = std::exp(theta);
        CHECK(f.x * f.x + f.y * f.y == doctest::Approx(r * r).epsilon(1e-9));
        CHECK(std::isfinite(f.x));
        CHECK(std::isfinite(f.y));
        CHECK(std::isfinite(f.z));
    }
}

TEST_CASE("attack") {
    CHECK(attack({8.0}, {5.0}, {1.0, 1.0, 1.0}) == Position{13.0});
    CHECK(attack({8.0}, {5.0}, {0.0, 3.0, 2.0}) == Position{5.0});
    CHECK(attack({0.0, 0.0}, {5.0, 6.0}, {1.3, 0.4, 2.0}) == Position{5.0, 6.0});
}

TEST_CASE("control weight schedule") {
    CHECK(SoaParams::a_schedule(2.0, 0, 100) == 2.0);
    CHECK(SoaParams::a_schedule(2.0, 100, 100) == 0.0);
    double prev = SoaParams::a_schedule(2.0, 0, 100);
    for (std::size_t t = 1; t <= 100; ++t) {
        const double cur = SoaParams::a_schedule(2.0, t, 100);
        CHECK(cur <= prev);
        prev = cur;
    }
}

TEST_CASE("soa_step composes migrate, spiral factors and attack") {
    const Position cur{1.0, 4.0};
    const Position best{3.0, 0.0};
    const SoaParams params = SoaParams::at_iteration(25, 100);
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        Rng rng(seed);
        Rng replay = rng;
        const Position stepped = soa_step(cur, best, params, rng);

        const double a_ctrl = SoaParams::a_schedule(params.fc, params.t, params.max_iter);
        const double rd = replay.uniform();
        const double b_ctrl = 2.0 * a_ctrl * a_ctrl * rd;
        const auto ds = migrate(cur, best, a_ctrl, b_ctrl);
        const SpiralFactors f = spiral_factors(params.u, params.v, replay);
        CHECK(stepped == attack(ds, best, f));
    }
}

TEST_CASE("terminal iteration collapses every seagull onto the best position") {
    // A = 0 at t = max_iter, which forces B = 2*A^2*rd = 0 for any draw, so
    // Ds vanishes and the attack lands exactly on best.
    const SoaParams params = SoaParams::at_iteration(100, 100);
    REQUIRE(SoaParams::a_schedule(params.fc, params.t, params.max_iter) == 0.0);
    const Position cur{9.0, -3.0};
    const Position best{1.0, 2.0};
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Rng rng(seed);
        CHECK(soa_step(cur, best, params, rng) == best);
    }
}
