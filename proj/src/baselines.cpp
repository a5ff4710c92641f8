#include "swarmsched/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "swarmsched/errors.hpp"
#include "swarmsched/parallel.hpp"

namespace swarmsched {

Assignment single_point_crossover(const Assignment& p1, const Assignment& p2,
                                  std::size_t cut) {
    Assignment child = p1;
    for (std::size_t g = cut; g < child.vm_of.size(); ++g)
        child.vm_of[g] = p2.vm_of[g];
    return child;
}

std::vector<std::size_t> pareto_ranks(std::span<const ObjectiveVector> objectives) {
    const std::size_t n = objectives.size();
    std::vector<std::size_t> rank(n, 0);
    std::vector<bool> assigned(n, false);
    std::size_t remaining = n;
    std::size_t level = 0;
    while (remaining > 0) {
        std::vector<std::size_t> front;
        for (std::size_t i = 0; i < n; ++i) {
            if (assigned[i]) continue;
            bool dominated = false;
            for (std::size_t j = 0; j < n && !dominated; ++j)
                dominated = !assigned[j] && j != i && dominates(objectives[j], objectives[i]);
            if (!dominated) front.push_back(i);
        }
        for (std::size_t i : front) {
            rank[i] = level;
            assigned[i] = true;
        }
        remaining -= front.size();
        ++level;
    }
    return rank;
}

namespace {

/// Tournament winner by (lower rank, larger crowding, lower index).
std::size_t tournament_pick(std::span<const std::size_t> ranks,
                            std::span<const double> crowding,
                            std::size_t tournament_size, Rng& rng) {
    std::size_t best = rng.uniform_index(ranks.size());
    for (std::size_t round = 1; round < tournament_size; ++round) {
        const std::size_t challenger = rng.uniform_index(ranks.size());
        if (ranks[challenger] < ranks[best] ||
            (ranks[challenger] == ranks[best] && crowding[challenger] > crowding[best]) ||
            (ranks[challenger] == ranks[best] && crowding[challenger] == crowding[best] &&
             challenger < best))
            best = challenger;
    }
    return best;
}

} // namespace

std::vector<Assignment> ga_make_children(std::span<const Assignment> population,
                                         std::span<const ObjectiveVector> objectives,
                                         const GaConfig& cfg, int vm_count, Rng& rng) {
    const std::vector<std::size_t> ranks = pareto_ranks(objectives);
    const std::vector<double> crowding =
        crowding_distances(std::span<const ObjectiveVector>(objectives));
    const std::size_t genes = population.front().vm_of.size();

    std::vector<Assignment> children;
    children.reserve(cfg.pop_size);
    while (children.size() < cfg.pop_size) {
        const std::size_t pa = tournament_pick(ranks, crowding, cfg.tournament_size, rng);
        const std::size_t pb = tournament_pick(ranks, crowding, cfg.tournament_size, rng);
        Assignment c1 = population[pa];
        Assignment c2 = population[pb];
        if (genes >= 2 && rng.uniform() < cfg.crossover_rate) {
            const std::size_t cut = 1 + rng.uniform_index(genes - 1);
            c1 = single_point_crossover(population[pa], population[pb], cut);
            c2 = single_point_crossover(population[pb], population[pa], cut);
        }
        for (Assignment* child : {&c1, &c2}) {
            for (int& gene : child->vm_of)
                if (rng.uniform() < cfg.mutation_rate)
                    gene = static_cast<int>(rng.uniform_index(static_cast<std::size_t>(vm_count)));
            if (children.size() < cfg.pop_size) children.push_back(std::move(*child));
        }
    }
    return children;
}

std::vector<Assignment> ga_step(std::span<const Assignment> population,
                                std::span<const ObjectiveVector> objectives,
                                std::vector<ObjectiveVector>& child_objectives,
                                Archive& archive, const GaConfig& cfg,
                                std::span<const Task> tasks, std::span<const Vm> vms,
                                const CostRates& rates, int parallelism, Rng& rng) {
    std::vector<Assignment> children =
        ga_make_children(population, objectives, cfg, static_cast<int>(vms.size()), rng);

    child_objectives.assign(children.size(), ObjectiveVector{});
    const int workers = resolve_parallelism(parallelism);
    parallel_for(children.size(), workers, [&](std::size_t i) {
        child_objectives[i] = evaluate(tasks, vms, children[i], rates);
    });

    std::vector<ArchiveEntry> entries(children.size());
    for (std::size_t i = 0; i < children.size(); ++i)
        entries[i] = ArchiveEntry{children[i], child_objectives[i], 0.0};
    archive = archive_update(std::move(archive), entries);
    return children;
}

BaselineKind parse_baseline(const std::string& name) {
    if (name == "ga") return BaselineKind::ga;
    if (name == "woa") return BaselineKind::woa;
    if (name == "soa") return BaselineKind::soa;
    if (name == "random") return BaselineKind::random_search;
    if (name == "pewoa" || name == "gcwoa")
        throw UnsupportedKind("algorithm '" + name + "' is not supported");
    throw std::invalid_argument("unknown algorithm '" + name + "'");
}

namespace {

RunResult run_random_search(std::span<const Task> tasks, std::span<const Vm> vms,
                            const EngineConfig& cfg, const CostRates& rates) {
    if (tasks.empty() || vms.empty())
        throw InvalidWorkload("random: need at least one task and one VM");
    const auto start = std::chrono::steady_clock::now();
    const RngPolicy policy(cfg.seed);
    const int workers = resolve_parallelism(cfg.parallelism);

    Archive archive(cfg.archive_capacity);
    std::size_t evaluations = 0;
    std::vector<IterationTrace> convergence;
    std::vector<ArchiveEntry> batch(cfg.pop_size);
    for (std::size_t k = 1; k <= cfg.max_iter; ++k) {
        parallel_for(cfg.pop_size, workers, [&](std::size_t i) {
            Rng rng = policy.stream(k, lanes::random_search, i);
            Assignment a;
            a.vm_of.resize(tasks.size());
            for (int& gene : a.vm_of)
                gene = static_cast<int>(rng.uniform_index(vms.size()));
            batch[i] = ArchiveEntry{a, evaluate(tasks, vms, a, rates), 0.0};
        });
        archive = archive_update(std::move(archive), batch);
        evaluations += batch.size();
        convergence.push_back(archive_minima(archive));
    }

    RunResult result;
    result.algo = "random";
    result.seed = cfg.seed;
    result.n = tasks.size();
    result.m = vms.size();
    result.frontier = archive;
    result.chosen = msd_select(archive);
    result.metrics.makespan = result.chosen.objectives.makespan;
    result.metrics.load_deviation = result.chosen.objectives.load_deviation;
    result.metrics.total_cost = result.chosen.objectives.total_cost;
    result.metrics.throughput = throughput(tasks.size(), result.chosen.objectives.makespan);
    result.metrics.evaluations = evaluations;
    result.metrics.wall_millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    result.convergence = std::move(convergence);
    return result;
}

RunResult run_ga(std::span<const Task> tasks, std::span<const Vm> vms,
                 const EngineConfig& cfg, const CostRates& rates) {
    if (tasks.empty() || vms.empty())
        throw InvalidWorkload("ga: need at least one task and one VM");
    const auto start = std::chrono::steady_clock::now();
    const RngPolicy policy(cfg.seed);
    const int workers = resolve_parallelism(cfg.parallelism);

    GaConfig ga_cfg;
    ga_cfg.pop_size = cfg.pop_size;
    ga_cfg.max_iter = cfg.max_iter;
    ga_cfg.mutation_rate = cfg.pm;

    // uniform random initial population
    std::vector<Assignment> population(ga_cfg.pop_size);
    {
        Rng rng = policy.stream(0, lanes::genetic, 0);
        for (Assignment& a : population) {
            a.vm_of.resize(tasks.size());
            for (int& gene : a.vm_of)
                gene = static_cast<int>(rng.uniform_index(vms.size()));
        }
    }
    std::vector<ObjectiveVector> objectives(population.size());
    parallel_for(population.size(), workers, [&](std::size_t i) {
        objectives[i] = evaluate(tasks, vms, population[i], rates);
    });

    Archive archive(cfg.archive_capacity);
    {
        std::vector<ArchiveEntry> entries(population.size());
        for (std::size_t i = 0; i < population.size(); ++i)
            entries[i] = ArchiveEntry{population[i], objectives[i], 0.0};
        archive = archive_update(std::move(archive), entries);
    }
    std::size_t evaluations = population.size();

    std::vector<IterationTrace> convergence;
    for (std::size_t k = 1; k <= ga_cfg.max_iter; ++k) {
        Rng rng = policy.stream(k, lanes::genetic, 0);
        std::vector<ObjectiveVector> child_objectives;
        population = ga_step(population, objectives, child_objectives, archive, ga_cfg,
                             tasks, vms, rates, cfg.parallelism, rng);
        objectives = std::move(child_objectives);
        evaluations += population.size();
    }

    RunResult result;
    result.algo = "ga";
    result.seed = cfg.seed;
    result.n = tasks.size();
    result.m = vms.size();
    result.frontier = archive;
    result.chosen = msd_select(archive);
    result.metrics.makespan = result.chosen.objectives.makespan;
    result.metrics.load_deviation = result.chosen.objectives.load_deviation;
    result.metrics.total_cost = result.chosen.objectives.total_cost;
    result.metrics.throughput = throughput(tasks.size(), result.chosen.objectives.makespan);
    result.metrics.evaluations = evaluations;
    result.metrics.wall_millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return result;
}

} // namespace

RunResult run_baseline(BaselineKind kind, std::span<const Task> tasks,
                       std::span<const Vm> vms, const EngineConfig& cfg,
                       const CostRates& rates) {
    EngineConfig doubled = cfg;
    doubled.pop_size = cfg.pop_size * 2; // budget parity with the two-species hybrid
    switch (kind) {
        case BaselineKind::woa:
            return run(tasks, vms, doubled, rates, SpeciesMask::whales_only, "woa");
        case BaselineKind::soa:
            return run(tasks, vms, doubled, rates, SpeciesMask::seagulls_only, "soa");
        case BaselineKind::ga:
            return run_ga(tasks, vms, doubled, rates);
        case BaselineKind::random_search:
            return run_random_search(tasks, vms, doubled, rates);
    }
    throw std::logic_error("run_baseline: unreachable");
}

RunResult run_algorithm(const std::string& name, std::span<const Task> tasks,
                        std::span<const Vm> vms, const EngineConfig& cfg,
                        const CostRates& rates) {
    if (name == "phwsoa")
        return run(tasks, vms, cfg, rates, SpeciesMask::both, "phwsoa");
    return run_baseline(parse_baseline(name), tasks, vms, cfg, rates);
}

} // namespace swarmsched
