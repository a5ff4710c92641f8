#ifndef SWARMSCHED_METRICS_HPP
#define SWARMSCHED_METRICS_HPP

#include <span>
#include <vector>

#include "swarmsched/model.hpp"

namespace swarmsched {

/// Exact non-dominated objective set over all m^n assignments, sorted
/// lexicographically. Guarded at m^n <= 10^6 (throws InstanceTooLarge).
/// threads > 1 enumerates chunks in parallel; the result is identical to
/// the serial path.
std::vector<ObjectiveVector> brute_force_front(std::span<const Task> tasks,
                                               std::span<const Vm> vms,
                                               const CostRates& rates,
                                               int threads = 1);

/// Filters a point multiset down to its non-dominated subset, dropping
/// duplicate objective vectors (first occurrence kept).
std::vector<ObjectiveVector> non_dominated_subset(std::span<const ObjectiveVector> points);

/// 3-D dominated volume between a minimization front and a reference point
/// that every front point must weakly dominate. Throws InvalidReference
/// when a point exceeds the reference in any component.
double hypervolume(std::span<const ObjectiveVector> front, const ObjectiveVector& ref);

/// 1.1 x component-wise max over the observed points; components whose max
/// is zero fall back to 1 so the reference stays strictly dominated.
ObjectiveVector reference_point(std::span<const ObjectiveVector> observed);

struct FrontQuality {
    double hypervolume = 0.0;
    double coverage_of_true_front = 0.0; // fraction of true-front points attained
};

/// Quality of an achieved front against the exhaustive one under a shared
/// reference point.
FrontQuality front_quality(std::span<const ObjectiveVector> achieved,
                           std::span<const ObjectiveVector> true_front,
                           const ObjectiveVector& ref);

} // namespace swarmsched

#endif // SWARMSCHED_METRICS_HPP
