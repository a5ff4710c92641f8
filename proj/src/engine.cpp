#include "swarmsched/engine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>

#include "swarmsched/errors.hpp"
#include "swarmsched/parallel.hpp"
#include "swarmsched/soa.hpp"
#include "swarmsched/woa.hpp"

namespace swarmsched {

IterationTrace archive_minima(const Archive& archive) {
    IterationTrace trace{std::numeric_limits<double>::infinity(),
                         std::numeric_limits<double>::infinity(),
                         std::numeric_limits<double>::infinity()};
    for (const ArchiveEntry& e : archive.entries()) {
        trace.min_makespan = std::min(trace.min_makespan, e.objectives.makespan);
        trace.min_load_deviation = std::min(trace.min_load_deviation, e.objectives.load_deviation);
        trace.min_total_cost = std::min(trace.min_total_cost, e.objectives.total_cost);
    }
    return trace;
}

DecodeResult decode(const Position& pos, int vm_count) {
    DecodeResult result;
    result.assignment.vm_of.resize(pos.size(), 0);
    for (std::size_t i = 0; i < pos.size(); ++i) {
        const double candidate = std::floor(pos[i] + 0.5);
        if (candidate >= 0.0 && candidate <= static_cast<double>(vm_count - 1))
            result.assignment.vm_of[i] = static_cast<int>(candidate);
        else
            result.marked.push_back(i);
    }
    return result;
}

Assignment repair_load_aware(const DecodeResult& decoded, std::span<const Task> tasks,
                             std::span<const Vm> vms, LoadTable& lt) {
    Assignment repaired = decoded.assignment;
    for (std::size_t i : decoded.marked) {
        std::size_t target = 0;
        for (std::size_t j = 1; j < lt.load_of.size(); ++j)
            if (lt.load_of[j] < lt.load_of[target]) target = j;
        repaired.vm_of[i] = static_cast<int>(target);
        lt.load_of[target] += execution_time(tasks[i], vms[target]);
    }
    return repaired;
}

Position mutate(const Position& pos, double pm, double lb, double ub, Rng& rng) {
    const double gate = rng.uniform();
    if (gate >= pm) return pos;
    Position fresh(pos.size());
    for (double& coord : fresh)
        coord = lb + rng.uniform() * (ub - lb);
    return fresh;
}

Position to_position(const Assignment& a) {
    Position pos(a.vm_of.size());
    for (std::size_t i = 0; i < a.vm_of.size(); ++i)
        pos[i] = static_cast<double>(a.vm_of[i]);
    return pos;
}

namespace {

/// Decode a continuous position, repair out-of-range coordinates onto the
/// least-loaded VMs, and evaluate the resulting schedule.
ArchiveEntry realize(const Position& pos, std::span<const Task> tasks,
                     std::span<const Vm> vms, const CostRates& rates) {
    const DecodeResult decoded = decode(pos, static_cast<int>(vms.size()));
    LoadTable lt;
    lt.load_of.assign(vms.size(), 0.0);
    std::size_t next_marked = 0;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (next_marked < decoded.marked.size() && decoded.marked[next_marked] == i) {
            ++next_marked;
            continue;
        }
        const auto j = static_cast<std::size_t>(decoded.assignment.vm_of[i]);
        lt.load_of[j] += execution_time(tasks[i], vms[j]);
    }
    ArchiveEntry entry;
    entry.assignment = repair_load_aware(decoded, tasks, vms, lt);
    entry.objectives = evaluate(tasks, vms, entry.assignment, rates);
    return entry;
}

struct SearchBounds {
    double lb = 0.0;
    double ub = 0.0;
};

SearchBounds bounds_for(std::size_t vm_count) {
    return {0.0, static_cast<double>(vm_count - 1)};
}

} // namespace

EngineState init_state(std::span<const Task> tasks, std::span<const Vm> vms,
                       const EngineConfig& cfg, const CostRates& rates,
                       SpeciesMask mask) {
    if (tasks.empty() || vms.empty())
        throw InvalidWorkload("engine: need at least one task and one VM");

    EngineState state;
    state.archive = Archive(cfg.archive_capacity);

    const std::size_t n = tasks.size();
    if (vms.size() == 1) {
        // one schedule exists; the Halton spread degenerates to it
        const Position origin(n, 0.0);
        state.whales.assign(cfg.pop_size, origin);
        state.seagulls.assign(cfg.pop_size, origin);
    } else {
        const auto bounds = bounds_for(vms.size());
        const auto halton_cfg = HaltonConfig::for_dims(n, bounds.lb, bounds.ub);
        auto pops = init_populations(cfg.pop_size, halton_cfg);
        state.whales = std::move(pops.whales);
        state.seagulls = std::move(pops.seagulls);
    }
    if (mask == SpeciesMask::whales_only) state.seagulls.clear();
    if (mask == SpeciesMask::seagulls_only) state.whales.clear();

    std::vector<Position*> all;
    for (auto& p : state.whales) all.push_back(&p);
    for (auto& p : state.seagulls) all.push_back(&p);

    std::vector<ArchiveEntry> candidates(all.size());
    const int workers = resolve_parallelism(cfg.parallelism);
    parallel_for(all.size(), workers, [&](std::size_t i) {
        candidates[i] = realize(*all[i], tasks, vms, rates);
        *all[i] = to_position(candidates[i].assignment);
    });

    state.archive = archive_update(std::move(state.archive), candidates);
    state.evaluations = candidates.size();
    state.convergence.push_back(archive_minima(state.archive));
    return state;
}

void iterate(EngineState& state, std::span<const Task> tasks, std::span<const Vm> vms,
             const EngineConfig& cfg, const CostRates& rates, SpeciesMask mask) {
    const auto deadline = std::chrono::steady_clock::now() +
                          std::chrono::duration<double>(cfg.batch_timeout_sec);
    const std::size_t k = state.t + 1;
    const auto bounds = bounds_for(vms.size());
    const RngPolicy policy(cfg.seed);

    const std::size_t n_whales = (mask == SpeciesMask::seagulls_only) ? 0 : state.whales.size();
    const std::size_t n_seagulls = (mask == SpeciesMask::whales_only) ? 0 : state.seagulls.size();
    const std::size_t total = n_whales + n_seagulls;

    const WoaParams woa_params = WoaParams::at_iteration(k, cfg.max_iter);
    const SoaParams soa_params = SoaParams::at_iteration(k, cfg.max_iter);

    std::vector<Position> next_positions(total);
    std::vector<ArchiveEntry> candidates(total);
    const std::span<const Position> whale_snapshot(state.whales);
    std::atomic<bool> timed_out{false};

    const int workers = resolve_parallelism(cfg.parallelism);
    parallel_for(total, workers, [&](std::size_t agent) {
        if (timed_out.load(std::memory_order_relaxed)) return;
        if (std::chrono::steady_clock::now() > deadline) {
            timed_out.store(true, std::memory_order_relaxed);
            return;
        }
        const bool is_whale = agent < n_whales;
        const std::size_t idx = is_whale ? agent : agent - n_whales;
        Rng rng = policy.stream(k, is_whale ? lanes::whale : lanes::seagull, idx);

        const ArchiveEntry& guide = select_leader(state.archive, rng, cfg.leader_pool);
        const Position guide_pos = to_position(guide.assignment);
        const Position& cur = is_whale ? state.whales[idx] : state.seagulls[idx];

        Position moved = is_whale
                             ? woa_step(cur, guide_pos, whale_snapshot, woa_params, rng)
                             : soa_step(cur, guide_pos, soa_params, rng);
        moved = mutate(moved, cfg.pm, bounds.lb, bounds.ub, rng);

        candidates[agent] = realize(moved, tasks, vms, rates);
        next_positions[agent] = to_position(candidates[agent].assignment);
    });

    if (timed_out.load())
        throw TimeoutExceeded("engine: iteration batch exceeded the wall-clock budget");

    state.archive = archive_update(std::move(state.archive), candidates);
    for (std::size_t i = 0; i < n_whales; ++i)
        state.whales[i] = std::move(next_positions[i]);
    for (std::size_t i = 0; i < n_seagulls; ++i)
        state.seagulls[i] = std::move(next_positions[n_whales + i]);
    state.evaluations += total;
    state.t = k;
    state.convergence.push_back(archive_minima(state.archive));
}

RunResult run(std::span<const Task> tasks, std::span<const Vm> vms,
              const EngineConfig& cfg, const CostRates& rates, SpeciesMask mask,
              const std::string& algo_name) {
    const auto start = std::chrono::steady_clock::now();
    EngineState state = init_state(tasks, vms, cfg, rates, mask);
    for (std::size_t k = 0; k < cfg.max_iter; ++k)
        iterate(state, tasks, vms, cfg, rates, mask);

    RunResult result;
    result.algo = algo_name;
    result.seed = cfg.seed;
    result.n = tasks.size();
    result.m = vms.size();
    result.frontier = state.archive;
    result.chosen = msd_select(state.archive);
    result.convergence = std::move(state.convergence);
    result.metrics.makespan = result.chosen.objectives.makespan;
    result.metrics.load_deviation = result.chosen.objectives.load_deviation;
    result.metrics.total_cost = result.chosen.objectives.total_cost;
    result.metrics.throughput = throughput(tasks.size(), result.chosen.objectives.makespan);
    result.metrics.evaluations = state.evaluations;
    result.metrics.wall_millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return result;
}

} // namespace swarmsched
