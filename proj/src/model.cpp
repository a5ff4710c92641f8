#include "swarmsched/model.hpp"

#include <cmath>
#include <stdexcept>

namespace swarmsched {

double execution_time(const Task& task, const Vm& vm) {
    return task.length_mi / vm.mips;
}

LoadTable load_table(std::span<const Task> tasks, std::span<const Vm> vms,
                     const Assignment& a) {
    LoadTable lt;
    lt.load_of.assign(vms.size(), 0.0);
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        const int j = a.vm_of[i];
        lt.load_of[static_cast<std::size_t>(j)] += execution_time(tasks[i], vms[static_cast<std::size_t>(j)]);
    }
    return lt;
}

double makespan(const LoadTable& lt) {
    if (lt.load_of.empty())
        throw std::invalid_argument("makespan: load table has zero VMs");
    double best = lt.load_of.front();
    for (double v : lt.load_of)
        if (v > best) best = v;
    return best;
}

double throughput(std::size_t n, double makespan) {
    if (n == 0) return 0.0;
    if (makespan <= 0.0)
        throw std::invalid_argument("throughput: makespan is zero with tasks present");
    return static_cast<double>(n) / makespan;
}

double load_deviation(const LoadTable& lt) {
    const std::size_t m = lt.load_of.size();
    if (m == 0) return 0.0;
    double mean = 0.0;
    for (double v : lt.load_of) mean += v;
    mean /= static_cast<double>(m);
    double var = 0.0;
    for (double v : lt.load_of) var += (v - mean) * (v - mean);
    return std::sqrt(var / static_cast<double>(m));
}

double running_cost(std::span<const Vm> vms, const LoadTable& lt,
                    const CostRates& rates) {
    double total = 0.0;
    for (std::size_t j = 0; j < vms.size(); ++j) {
        const double per_sec = vms[j].ram_mb * rates.ram_price_per_mb_sec +
                               vms[j].storage_mb * rates.storage_price_per_mb_sec;
        total += per_sec * lt.load_of[j];
    }
    return total;
}

double bandwidth_cost(std::span<const Task> tasks, std::span<const Vm> vms,
                      const Assignment& a, const CostRates& rates) {
    std::vector<double> bytes(vms.size(), 0.0);
    for (std::size_t i = 0; i < tasks.size(); ++i)
        bytes[static_cast<std::size_t>(a.vm_of[i])] += tasks[i].file_size_b + tasks[i].output_size_b;
    double total = 0.0;
    for (std::size_t j = 0; j < vms.size(); ++j) {
        if (bytes[j] == 0.0) continue;
        const double bytes_per_sec = vms[j].bw_mbps * 1e6 / 8.0;
        total += bytes[j] / bytes_per_sec * rates.bw_price_per_sec;
    }
    return total;
}

ObjectiveVector evaluate(std::span<const Task> tasks, std::span<const Vm> vms,
                         const Assignment& a, const CostRates& rates) {
    const LoadTable lt = load_table(tasks, vms, a);
    ObjectiveVector obj;
    obj.makespan = makespan(lt);
    obj.load_deviation = load_deviation(lt);
    obj.total_cost = running_cost(vms, lt, rates) + bandwidth_cost(tasks, vms, a, rates);
    return obj;
}

} // namespace swarmsched
