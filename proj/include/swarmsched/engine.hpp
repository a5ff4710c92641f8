#ifndef SWARMSCHED_ENGINE_HPP
#define SWARMSCHED_ENGINE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "swarmsched/halton.hpp"
#include "swarmsched/model.hpp"
#include "swarmsched/pareto.hpp"
#include "swarmsched/rng.hpp"

namespace swarmsched {

struct EngineConfig {
    std::size_t pop_size = 50;        // agents per species
    std::size_t max_iter = 100;
    double pm = 0.05;                 // mutation probability
    std::uint64_t seed = 1;
    int parallelism = 0;              // 0 = all hardware threads
    double batch_timeout_sec = 60.0;  // wall-clock limit per iteration batch
    std::size_t archive_capacity = 50;
    std::size_t leader_pool = 10;     // leaders drawn from this many top-crowding entries
};

enum class SpeciesMask { both, whales_only, seagulls_only };

/// A rounded position: in-range coordinates become VM indices, out-of-range
/// ones are listed (ascending) for load-aware repair.
struct DecodeResult {
    Assignment assignment;
    std::vector<std::size_t> marked;
};

DecodeResult decode(const Position& pos, int vm_count);

/// Places each marked task, in ascending task order, on the VM with the
/// lowest accumulated load (ties to the lowest VM id), updating `lt` after
/// each placement.
Assignment repair_load_aware(const DecodeResult& decoded, std::span<const Task> tasks,
                             std::span<const Vm> vms, LoadTable& lt);

/// With probability pm, resamples every coordinate uniformly in [lb, ub];
/// otherwise returns the position unchanged. Draw order: gate, then one
/// uniform per dimension when the gate opens.
Position mutate(const Position& pos, double pm, double lb, double ub, Rng& rng);

/// Integer-valued coordinates of a schedule, the stored form of every
/// position between iterations.
Position to_position(const Assignment& a);

/// Archive minima after an iteration, for convergence reporting.
struct IterationTrace {
    double min_makespan = 0.0;
    double min_load_deviation = 0.0;
    double min_total_cost = 0.0;
};

/// Per-objective minima over the archive.
IterationTrace archive_minima(const Archive& archive);

struct RunMetrics {
    double makespan = 0.0;
    double load_deviation = 0.0;
    double total_cost = 0.0;
    double throughput = 0.0;
    double wall_millis = 0.0;
    std::size_t evaluations = 0;
};

struct RunResult {
    std::string algo;
    std::uint64_t seed = 0;
    std::size_t n = 0;
    std::size_t m = 0;
    Archive frontier{50};
    ArchiveEntry chosen;
    RunMetrics metrics;
    std::vector<IterationTrace> convergence; // entry 0 = initial populations
};

struct EngineState {
    std::vector<Position> whales;
    std::vector<Position> seagulls;
    Archive archive{50};
    std::size_t t = 0; // completed iterations
    std::size_t evaluations = 0;
    std::vector<IterationTrace> convergence;
};

/// Halton-initializes the active populations, evaluates them and seeds the
/// archive. Throws InvalidWorkload on an empty task list or fleet.
EngineState init_state(std::span<const Task> tasks, std::span<const Vm> vms,
                       const EngineConfig& cfg, const CostRates& rates,
                       SpeciesMask mask = SpeciesMask::both);

/// One full iteration: per-agent leader selection, WOA/SOA move, mutation,
/// decode + repair, evaluation (data-parallel across agents, each on its own
/// RNG stream), then one archive update in agent-index order. Throws
/// TimeoutExceeded when the batch passes the configured wall-clock budget,
/// leaving the state invalid.
void iterate(EngineState& state, std::span<const Task> tasks, std::span<const Vm> vms,
             const EngineConfig& cfg, const CostRates& rates,
             SpeciesMask mask = SpeciesMask::both);

/// Full optimization: init, max_iter iterations, MSD-selected final choice.
/// (seed, config, workload) fixes every output bit at any parallelism level.
RunResult run(std::span<const Task> tasks, std::span<const Vm> vms,
              const EngineConfig& cfg, const CostRates& rates = {},
              SpeciesMask mask = SpeciesMask::both,
              const std::string& algo_name = "phwsoa");

} // namespace swarmsched

#endif // SWARMSCHED_ENGINE_HPP
