// Compares the serial reference path against the OpenMP path for the two
// data-parallel kernels: per-agent evaluation inside the optimizer loop and
// exhaustive front enumeration. Also verifies both paths agree bit-exactly.

#include <chrono>
#include <functional>
#include <iostream>

#include "swarmsched/baselines.hpp"
#include "swarmsched/engine.hpp"
#include "swarmsched/metrics.hpp"
#include "swarmsched/parallel.hpp"
#include "swarmsched/report.hpp"
#include "swarmsched/workload.hpp"

using namespace swarmsched;

namespace {

double time_millis(const std::function<void()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

bool same_frontier(const RunResult& a, const RunResult& b) {
    const auto oa = a.frontier.objectives();
    const auto ob = b.frontier.objectives();
    if (oa.size() != ob.size()) return false;
    for (std::size_t i = 0; i < oa.size(); ++i)
        if (!(oa[i] == ob[i])) return false;
    return true;
}

} // namespace

int main() {
    const int hw = resolve_parallelism(0);
    std::cout << "hardware threads: " << hw << "\n\n";

    SynthSpec spec;
    spec.n_tasks = 400;
    spec.vm_count_lo = spec.vm_count_hi = 48;
    spec.seed = 7;
    const auto tasks = synth_tasks(spec);
    const auto vms = build_vms(spec);

    EngineConfig cfg;
    cfg.pop_size = 50;
    cfg.max_iter = 40;
    cfg.seed = 7;

    RunResult serial_result, parallel_result;
    cfg.parallelism = 1;
    const double serial_ms = time_millis([&] { serial_result = run(tasks, vms, cfg); });
    cfg.parallelism = hw;
    const double parallel_ms = time_millis([&] { parallel_result = run(tasks, vms, cfg); });

    std::cout << "optimizer loop  (n=400, m=48, pop=50, iters=40)\n";
    std::cout << "  serial   " << serial_ms << " ms\n";
    std::cout << "  omp x" << hw << "   " << parallel_ms << " ms  (speedup "
              << serial_ms / parallel_ms << ")\n";
    std::cout << "  frontiers identical: " << (same_frontier(serial_result, parallel_result) ? "yes" : "NO")
              << "\n\n";

    SynthSpec small;
    small.n_tasks = 12;
    small.vm_count_lo = small.vm_count_hi = 3;
    small.seed = 3;
    const auto small_tasks = synth_tasks(small);
    const auto small_vms = build_vms(small);
    const CostRates rates;

    std::vector<ObjectiveVector> front_serial, front_parallel;
    const double enum_serial_ms =
        time_millis([&] { front_serial = brute_force_front(small_tasks, small_vms, rates, 1); });
    const double enum_parallel_ms =
        time_millis([&] { front_parallel = brute_force_front(small_tasks, small_vms, rates, hw); });

    bool fronts_match = front_serial.size() == front_parallel.size();
    for (std::size_t i = 0; fronts_match && i < front_serial.size(); ++i)
        fronts_match = front_serial[i] == front_parallel[i];

    std::cout << "front enumeration  (3^12 = 531441 schedules)\n";
    std::cout << "  serial   " << enum_serial_ms << " ms\n";
    std::cout << "  omp x" << hw << "   " << enum_parallel_ms << " ms  (speedup "
              << enum_serial_ms / enum_parallel_ms << ")\n";
    std::cout << "  fronts identical: " << (fronts_match ? "yes" : "NO") << "\n";

    return (same_frontier(serial_result, parallel_result) && fronts_match) ? 0 : 1;
}
