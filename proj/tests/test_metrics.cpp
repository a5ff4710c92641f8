#include <algorithm>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "swarmsched/errors.hpp"
#include "swarmsched/metrics.hpp"
#include "swarmsched/pareto.hpp"

using namespace swarmsched;
using testutil::make_task;
using testutil::make_vm;

TEST_CASE("brute_force_front enumerates tiny instances exactly") {
    const CostRates rates;
    SUBCASE("single task picks the best of three VMs") {
        const std::vector<Task> tasks = {make_task(0, 1000, 100, 100)};
        const std::vector<Vm> vms = {make_vm(0, 100), make_vm(1, 200), make_vm(2, 400)};
        const auto front = brute_force_front(tasks, vms, rates);
        std::vector<ObjectiveVector> all;
        for (int j = 0; j < 3; ++j)
            all.push_back(evaluate(tasks, vms, Assignment{{j}}, rates));
        for (const auto& p : front) {
            bool found = false;
            for (const auto& q : all) found = found || p == q;
            CHECK(found);
        }
        for (const auto& p : front)
            for (const auto& q : front)
                CHECK_FALSE(dominates(p, q));
    }
    SUBCASE("identical tasks on identical VMs collapse to one point") {
        const std::vector<Task> tasks = {make_task(0, 1000), make_task(1, 1000)};
        const std::vector<Vm> vms = {make_vm(0, 100), make_vm(1, 100)};
        const auto front = brute_force_front(tasks, vms, rates);
        CHECK(front.size() == 1); // the balanced split dominates the lumped ones
    }
    SUBCASE("guard rejects oversized instances") {
        Rng rng(1);
        const auto tasks = testutil::random_tasks(20, rng);
        std::vector<Vm> vms;
        for (int j = 0; j < 10; ++j) vms.push_back(make_vm(j, 100.0 + j));
        CHECK_THROWS_AS(brute_force_front(tasks, vms, rates), InstanceTooLarge);
    }
}

TEST_CASE("brute_force_front parallel equals serial") {
    Rng rng(88);
    const auto tasks = testutil::random_tasks(6, rng);
    const auto vms = testutil::random_vms(3, rng);
    const CostRates rates;
    const auto serial = brute_force_front(tasks, vms, rates, 1);
    const auto parallel = brute_force_front(tasks, vms, rates, 4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i)
        CHECK(serial[i] == parallel[i]);
    for (const auto& p : serial)
        for (const auto& q : serial)
            CHECK_FALSE(dominates(p, q));
}

TEST_CASE("hypervolume hand values") {
    SUBCASE("single point is a box") {
        const std::vector<ObjectiveVector> front = {{1, 1, 1}};
        CHECK(hypervolume(front, {3, 4, 5}) == 2.0 * 3.0 * 4.0);
    }
    SUBCASE("empty front") {
        CHECK(hypervolume(std::vector<ObjectiveVector>{}, {1, 1, 1}) == 0.0);
    }
    SUBCASE("two-point staircase, third axis flat") {
        const std::vector<ObjectiveVector> front = {{1, 2, 0}, {2, 1, 0}};
        CHECK(hypervolume(front, {3, 3, 1}) == 3.0); // 2 + 2 - 1, unit-depth slab
    }
    SUBCASE("dominated points add nothing") {
        const std::vector<ObjectiveVector> lean = {{1, 2, 0}, {2, 1, 0}};
        const std::vector<ObjectiveVector> padded = {{1, 2, 0}, {2, 1, 0}, {2, 2, 0.5}};
        CHECK(hypervolume(lean, {3, 3, 1}) == hypervolume(padded, {3, 3, 1}));
    }
    SUBCASE("reference must bound the front") {
        const std::vector<ObjectiveVector> front = {{1, 2, 3}};
        CHECK_THROWS_AS(hypervolume(front, {2, 2, 2}), InvalidReference);
    }
}

TEST_CASE("hypervolume is monotone under non-dominated additions") {
    Rng rng(314);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<ObjectiveVector> points;
        const int k = 1 + static_cast<int>(rng.uniform_index(12));
        for (int i = 0; i < k; ++i)
            points.push_back({rng.uniform(0.0, 10.0), rng.uniform(0.0, 10.0),
                              rng.uniform(0.0, 10.0)});
        const ObjectiveVector ref{11, 11, 11};
        const ObjectiveVector extra{rng.uniform(0.0, 10.0), rng.uniform(0.0, 10.0),
                                    rng.uniform(0.0, 10.0)};
        bool dominated = false;
        for (const auto& p : points) dominated = dominated || dominates(p, extra) || p == extra;
        if (dominated) continue;
        auto bigger = points;
        bigger.push_back(extra);
        CHECK(hypervolume(bigger, ref) >= hypervolume(points, ref) - 1e-12);
    }
}

TEST_CASE("hypervolume agrees with Monte-Carlo volume") {
    Rng rng(555);
    std::vector<ObjectiveVector> front = {{1, 6, 4}, {3, 3, 3}, {6, 1, 5}, {2, 5, 1}};
    const ObjectiveVector ref{8, 8, 8};
    const double hv = hypervolume(front, ref);

    int inside = 0;
    const int samples = 200000;
    for (int s = 0; s < samples; ++s) {
        const double x = rng.uniform(0.0, 8.0);
        const double y = rng.uniform(0.0, 8.0);
        const double z = rng.uniform(0.0, 8.0);
        for (const auto& p : front) {
            if (p.makespan <= x && p.load_deviation <= y && p.total_cost <= z) {
                ++inside;
                break;
            }
        }
    }
    const double mc = 8.0 * 8.0 * 8.0 * inside / samples;
    CHECK(hv == doctest::Approx(mc).epsilon(0.02));
}

TEST_CASE("reference_point scales observed maxima") {
    const std::vector<ObjectiveVector> pts = {{10, 0, 5}, {2, 0, 50}};
    const ObjectiveVector ref = reference_point(pts);
    CHECK(ref.makespan == doctest::Approx(11.0));
    CHECK(ref.load_deviation == 1.0); // zero max falls back to 1
    CHECK(ref.total_cost == doctest::Approx(55.0));
}

TEST_CASE("front_quality coverage counts attained true-front points") {
    const std::vector<ObjectiveVector> truth = {{1, 2, 0}, {2, 1, 0}, {0, 3, 0}};
    const std::vector<ObjectiveVector> achieved = {{1, 2, 0}, {2, 1, 0}};
    const ObjectiveVector ref = reference_point(truth);
    const FrontQuality q = front_quality(achieved, truth, ref);
    CHECK(q.coverage_of_true_front == doctest::Approx(2.0 / 3.0));
    CHECK(q.hypervolume > 0.0);
}
