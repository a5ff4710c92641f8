#include "swarmsched/pareto.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace swarmsched {

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    const auto av = objective_array(a);
    const auto bv = objective_array(b);
    bool strictly_better = false;
    for (std::size_t k = 0; k < av.size(); ++k) {
        if (av[k] > bv[k]) return false;
        if (av[k] < bv[k]) strictly_better = true;
    }
    return strictly_better;
}

std::vector<ObjectiveVector> Archive::objectives() const {
    std::vector<ObjectiveVector> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.objectives);
    return out;
}

std::vector<double> crowding_distances(std::span<const ObjectiveVector> objectives) {
    const std::size_t n = objectives.size();
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(n, 0.0);
    if (n == 0) return dist;
    if (n == 1) { dist[0] = inf; return dist; }

    std::vector<std::size_t> order(n);
    for (std::size_t k = 0; k < 3; ++k) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return objective_array(objectives[a])[k] < objective_array(objectives[b])[k];
        });
        const double lo = objective_array(objectives[order.front()])[k];
        const double hi = objective_array(objectives[order.back()])[k];
        dist[order.front()] = inf;
        dist[order.back()] = inf;
        if (hi == lo) continue; // zero spread contributes nothing
        for (std::size_t i = 1; i + 1 < n; ++i) {
            const double prev = objective_array(objectives[order[i - 1]])[k];
            const double next = objective_array(objectives[order[i + 1]])[k];
            if (dist[order[i]] != inf)
                dist[order[i]] += (next - prev) / (hi - lo);
        }
    }
    return dist;
}

namespace {

void refresh_crowding(std::vector<ArchiveEntry>& entries) {
    std::vector<ObjectiveVector> objs;
    objs.reserve(entries.size());
    for (const auto& e : entries) objs.push_back(e.objectives);
    const std::vector<double> dist = crowding_distances(objs);
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i].crowding = dist[i];
}

} // namespace

Archive archive_update(Archive archive, std::span<const ArchiveEntry> candidates) {
    auto& entries = archive.entries_;
    for (const ArchiveEntry& cand : candidates) {
        bool skip = false;
        for (const ArchiveEntry& e : entries) {
            if (e.objectives == cand.objectives || dominates(e.objectives, cand.objectives)) {
                skip = true;
                break;
            }
        }
        if (skip) continue;
        std::erase_if(entries, [&](const ArchiveEntry& e) {
            return dominates(cand.objectives, e.objectives);
        });
        entries.push_back(cand);
    }

    refresh_crowding(entries);
    while (entries.size() > archive.capacity_) {
        std::size_t victim = 0;
        for (std::size_t i = 1; i < entries.size(); ++i)
            if (entries[i].crowding < entries[victim].crowding) victim = i;
        entries.erase(entries.begin() + static_cast<std::ptrdiff_t>(victim));
        refresh_crowding(entries);
    }
    return archive;
}

const ArchiveEntry& select_leader(const Archive& archive, Rng& rng, std::size_t top_k) {
    if (archive.empty())
        throw std::invalid_argument("select_leader: empty archive");
    const auto& entries = archive.entries();
    std::vector<std::size_t> order(entries.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return entries[a].crowding > entries[b].crowding;
    });
    const std::size_t k = std::min(top_k, entries.size());
    return entries[order[rng.uniform_index(k)]];
}

const ArchiveEntry& msd_select(const Archive& archive) {
    if (archive.empty())
        throw std::invalid_argument("msd_select: empty archive");
    const auto& entries = archive.entries();

    std::array<double, 3> lo{}, hi{};
    for (std::size_t k = 0; k < 3; ++k) {
        lo[k] = std::numeric_limits<double>::infinity();
        hi[k] = -std::numeric_limits<double>::infinity();
    }
    for (const auto& e : entries) {
        const auto v = objective_array(e.objectives);
        for (std::size_t k = 0; k < 3; ++k) {
            lo[k] = std::min(lo[k], v[k]);
            hi[k] = std::max(hi[k], v[k]);
        }
    }

    std::size_t best = 0;
    double best_msd = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto v = objective_array(entries[i].objectives);
        double msd = 0.0;
        for (std::size_t k = 0; k < 3; ++k) {
            if (hi[k] == lo[k]) continue;
            const double norm = (v[k] - lo[k]) / (hi[k] - lo[k]);
            msd += norm * norm;
        }
        msd /= 3.0;
        const auto& b = entries[best].objectives;
        const auto& c = entries[i].objectives;
        const bool better =
            msd < best_msd ||
            (msd == best_msd &&
             (c.makespan < b.makespan ||
              (c.makespan == b.makespan && c.total_cost < b.total_cost)));
        if (better) {
            best = i;
            best_msd = msd;
        }
    }
    return entries[best];
}

} // namespace swarmsched
