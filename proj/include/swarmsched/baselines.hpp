#ifndef SWARMSCHED_BASELINES_HPP
#define SWARMSCHED_BASELINES_HPP

#include <span>
#include <string>
#include <vector>

#include "swarmsched/engine.hpp"
#include "swarmsched/model.hpp"
#include "swarmsched/rng.hpp"

namespace swarmsched {

struct GaConfig {
    std::size_t pop_size = 100; // must be even
    std::size_t max_iter = 100;
    double crossover_rate = 0.9;
    double mutation_rate = 0.05;
    std::size_t tournament_size = 2;
};

/// Child takes genes [0, cut) from the first parent and the rest from the
/// second. cut must lie in [1, n-1].
Assignment single_point_crossover(const Assignment& p1, const Assignment& p2,
                                  std::size_t cut);

/// Pareto rank (0 = non-dominated) of each population member, computed by
/// repeated front peeling.
std::vector<std::size_t> pareto_ranks(std::span<const ObjectiveVector> objectives);

/// Produces pop_size children from the current population: binary tournament
/// on (rank, crowding), gated single-point crossover, per-gene uniform VM
/// mutation. Evaluation is left to the caller.
std::vector<Assignment> ga_make_children(std::span<const Assignment> population,
                                         std::span<const ObjectiveVector> objectives,
                                         const GaConfig& cfg, int vm_count, Rng& rng);

/// One GA generation: children are built, evaluated and merged into the
/// archive; the returned children replace the population.
std::vector<Assignment> ga_step(std::span<const Assignment> population,
                                std::span<const ObjectiveVector> objectives,
                                std::vector<ObjectiveVector>& child_objectives,
                                Archive& archive, const GaConfig& cfg,
                                std::span<const Task> tasks, std::span<const Vm> vms,
                                const CostRates& rates, int parallelism, Rng& rng);

enum class BaselineKind { ga, woa, soa, random_search };

/// Maps a CLI algorithm name to a baseline kind. Throws UnsupportedKind for
/// the known-but-unsupported names (pewoa, gcwoa) and std::invalid_argument
/// otherwise. "phwsoa" is not a baseline; dispatch it to engine::run.
BaselineKind parse_baseline(const std::string& name);

/// Runs one comparison algorithm under the shared objective space and
/// archive machinery. Population sizes are doubled internally so every
/// baseline consumes the same evaluation budget as the two-species hybrid
/// under the same config.
RunResult run_baseline(BaselineKind kind, std::span<const Task> tasks,
                       std::span<const Vm> vms, const EngineConfig& cfg,
                       const CostRates& rates = {});

/// Dispatches an algorithm by CLI name ("phwsoa" or a baseline).
RunResult run_algorithm(const std::string& name, std::span<const Task> tasks,
                        std::span<const Vm> vms, const EngineConfig& cfg,
                        const CostRates& rates = {});

} // namespace swarmsched

#endif // SWARMSCHED_BASELINES_HPP
