#include "swarmsched/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <tuple>

#include "swarmsched/errors.hpp"
#include "swarmsched/parallel.hpp"
#include "swarmsched/pareto.hpp"

namespace swarmsched {

namespace {

constexpr std::uint64_t kEnumerationGuard = 1000000;

std::uint64_t assignment_count_guarded(std::size_t n, std::size_t m) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > kEnumerationGuard / m)
            throw InstanceTooLarge("brute_force_front: m^n exceeds the 10^6 guard");
        total *= m;
    }
    if (total > kEnumerationGuard)
        throw InstanceTooLarge("brute_force_front: m^n exceeds the 10^6 guard");
    return total;
}

Assignment decode_index(std::uint64_t index, std::size_t n, std::size_t m) {
    Assignment a;
    a.vm_of.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        a.vm_of[i] = static_cast<int>(index % m);
        index /= m;
    }
    return a;
}

bool lex_less(const ObjectiveVector& a, const ObjectiveVector& b) {
    return std::tie(a.makespan, a.load_deviation, a.total_cost) <
           std::tie(b.makespan, b.load_deviation, b.total_cost);
}

void insert_non_dominated(std::vector<ObjectiveVector>& front, const ObjectiveVector& p) {
    for (const ObjectiveVector& q : front)
        if (q == p || dominates(q, p)) return;
    std::erase_if(front, [&](const ObjectiveVector& q) { return dominates(p, q); });
    front.push_back(p);
}

} // namespace

std::vector<ObjectiveVector> non_dominated_subset(std::span<const ObjectiveVector> points) {
    std::vector<ObjectiveVector> front;
    for (const ObjectiveVector& p : points)
        insert_non_dominated(front, p);
    return front;
}

std::vector<ObjectiveVector> brute_force_front(std::span<const Task> tasks,
                                               std::span<const Vm> vms,
                                               const CostRates& rates,
                                               int threads) {
    const std::size_t n = tasks.size();
    const std::size_t m = vms.size();
    if (n == 0 || m == 0)
        throw InvalidWorkload("brute_force_front: empty workload");
    const std::uint64_t total = assignment_count_guarded(n, m);

    const int workers = resolve_parallelism(threads);
    const std::uint64_t chunk = (total + static_cast<std::uint64_t>(workers) - 1) /
                                static_cast<std::uint64_t>(workers);
    std::vector<std::vector<ObjectiveVector>> local(static_cast<std::size_t>(workers));

    parallel_for(static_cast<std::size_t>(workers), workers, [&](std::size_t w) {
        const std::uint64_t begin = static_cast<std::uint64_t>(w) * chunk;
        const std::uint64_t end = std::min(total, begin + chunk);
        if (begin >= end) return;
        Assignment a = decode_index(begin, n, m);
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            insert_non_dominated(local[w], evaluate(tasks, vms, a, rates));
            // odometer step to the next assignment
            for (std::size_t i = 0; i < n; ++i) {
                if (++a.vm_of[i] < static_cast<int>(m)) break;
                a.vm_of[i] = 0;
            }
        }
    });

    std::vector<ObjectiveVector> merged;
    for (const auto& part : local)
        for (const ObjectiveVector& p : part)
            insert_non_dominated(merged, p);
    std::sort(merged.begin(), merged.end(), lex_less);
    return merged;
}

ObjectiveVector reference_point(std::span<const ObjectiveVector> observed) {
    std::array<double, 3> hi{0.0, 0.0, 0.0};
    for (const ObjectiveVector& p : observed) {
        const auto v = objective_array(p);
        for (std::size_t k = 0; k < 3; ++k) hi[k] = std::max(hi[k], v[k]);
    }
    for (double& v : hi) v = v > 0.0 ? 1.1 * v : 1.0;
    return {hi[0], hi[1], hi[2]};
}

double hypervolume(std::span<const ObjectiveVector> front, const ObjectiveVector& ref) {
    if (front.empty()) return 0.0;
    const auto rv = objective_array(ref);
    for (const ObjectiveVector& p : front) {
        const auto v = objective_array(p);
        for (std::size_t k = 0; k < 3; ++k)
            if (v[k] > rv[k])
                throw InvalidReference("hypervolume: point exceeds the reference point");
    }

    // Sweep along the cost axis, accumulating the 2-D staircase area of the
    // points active below each level.
    std::vector<ObjectiveVector> pts(front.begin(), front.end());
    std::sort(pts.begin(), pts.end(), [](const ObjectiveVector& a, const ObjectiveVector& b) {
        return a.total_cost < b.total_cost;
    });

    struct Pt { double x, y; };
    std::vector<Pt> active;
    auto staircase_area = [&]() {
        std::vector<Pt> sorted = active;
        std::sort(sorted.begin(), sorted.end(), [](const Pt& a, const Pt& b) {
            return a.x < b.x || (a.x == b.x && a.y < b.y);
        });
        std::vector<Pt> stair;
        double min_y = std::numeric_limits<double>::infinity();
        for (const Pt& p : sorted) {
            if (p.y < min_y) {
                stair.push_back(p);
                min_y = p.y;
            }
        }
        double area = 0.0;
        for (std::size_t i = 0; i < stair.size(); ++i) {
            const double next_x = (i + 1 < stair.size()) ? stair[i + 1].x : rv[0];
            area += (next_x - stair[i].x) * (rv[1] - stair[i].y);
        }
        return area;
    };

    double volume = 0.0;
    std::size_t i = 0;
    while (i < pts.size()) {
        const double level = pts[i].total_cost;
        while (i < pts.size() && pts[i].total_cost == level) {
            active.push_back({pts[i].makespan, pts[i].load_deviation});
            ++i;
        }
        const double next_level = (i < pts.size()) ? pts[i].total_cost : rv[2];
        volume += staircase_area() * (next_level - level);
    }
    return volume;
}

FrontQuality front_quality(std::span<const ObjectiveVector> achieved,
                           std::span<const ObjectiveVector> true_front,
                           const ObjectiveVector& ref) {
    FrontQuality q;
    q.hypervolume = hypervolume(achieved, ref);
    if (true_front.empty()) return q;
    std::size_t attained = 0;
    for (const ObjectiveVector& t : true_front) {
        const auto tv = objective_array(t);
        for (const ObjectiveVector& p : achieved) {
            const auto pv = objective_array(p);
            bool covers = true;
            for (std::size_t k = 0; k < 3 && covers; ++k)
                covers = pv[k] <= tv[k] + 1e-9 * std::max(1.0, std::abs(tv[k]));
            if (covers) {
                ++attained;
                break;
            }
        }
    }
    q.coverage_of_true_front =
        static_cast<double>(attained) / static_cast<double>(true_front.size());
    return q;
}

} // namespace swarmsched
