#ifndef SWARMSCHED_PARETO_HPP
#define SWARMSCHED_PARETO_HPP

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "swarmsched/model.hpp"
#include "swarmsched/rng.hpp"

namespace swarmsched {

inline std::array<double, 3> objective_array(const ObjectiveVector& o) {
    return {o.makespan, o.load_deviation, o.total_cost};
}

/// True iff a is no worse in every objective and strictly better in at
/// least one (all objectives minimized).
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);

struct ArchiveEntry {
    Assignment assignment;
    ObjectiveVector objectives;
    double crowding = 0.0; // refreshed after every archive mutation
};

/// Bounded set of mutually non-dominated schedules, kept in deterministic
/// merge order.
class Archive {
public:
    explicit Archive(std::size_t capacity = 50) : capacity_(capacity) {}

    const std::vector<ArchiveEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    std::size_t capacity() const { return capacity_; }

    /// Objective vectors of all entries, in archive order.
    std::vector<ObjectiveVector> objectives() const;

    friend Archive archive_update(Archive archive, std::span<const ArchiveEntry> candidates);

private:
    std::vector<ArchiveEntry> entries_;
    std::size_t capacity_;
};

/// Normalized-span crowding distance per entry. Sorted extremes of each
/// objective get +infinity; interior entries sum (next - prev)/(max - min)
/// per objective, skipping objectives with zero spread.
std::vector<double> crowding_distances(std::span<const ObjectiveVector> objectives);

/// Merges candidates into the archive one at a time in the given order:
/// duplicates (identical objective vectors) and dominated candidates are
/// skipped, entries dominated by a candidate are removed. Over capacity,
/// minimum-crowding entries are removed one by one with recomputation.
Archive archive_update(Archive archive, std::span<const ArchiveEntry> candidates);

/// A uniformly random entry among the min(top_k, size) largest-crowding
/// entries. Throws std::invalid_argument on an empty archive.
const ArchiveEntry& select_leader(const Archive& archive, Rng& rng,
                                  std::size_t top_k = 10);

/// The balanced compromise entry: min-max normalizes each objective over
/// the archive and picks the minimum mean squared normalized deviation.
/// Ties break by lowest makespan, then lowest cost, then lowest index.
const ArchiveEntry& msd_select(const Archive& archive);

} // namespace swarmsched

#endif // SWARMSCHED_PARETO_HPP
