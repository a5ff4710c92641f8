#ifndef SWARMSCHED_MODEL_HPP
#define SWARMSCHED_MODEL_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace swarmsched {

/// An independent cloud task.
struct Task {
    int id = 0;
    double length_mi = 0.0;      // computational demand, million instructions
    int pes_number = 1;          // required cores; carried but not a feasibility gate
    double file_size_b = 0.0;    // input payload, bytes
    double output_size_b = 0.0;  // output payload, bytes
};

/// A virtual machine in the fleet. Ids are contiguous 0..m-1.
struct Vm {
    int id = 0;
    double mips = 0.0;           // processing rate, million instructions per second
    int pes_number = 1;
    double ram_mb = 0.0;
    double storage_mb = 0.0;
    double bw_mbps = 0.0;        // bandwidth, megabits per second
};

/// One complete task-to-VM mapping: vm_of[i] is the VM executing task i.
struct Assignment {
    std::vector<int> vm_of;
};

/// Unit prices for the cost objective.
struct CostRates {
    double ram_price_per_mb_sec = 0.001;      // P1
    double storage_price_per_mb_sec = 0.0005; // P2
    double bw_price_per_sec = 10.0;           // P3
};

/// The three minimized objectives of one schedule.
struct ObjectiveVector {
    double makespan = 0.0;        // seconds
    double load_deviation = 0.0;  // seconds
    double total_cost = 0.0;      // currency
};

inline bool operator==(const ObjectiveVector& a, const ObjectiveVector& b) {
    return a.makespan == b.makespan && a.load_deviation == b.load_deviation &&
           a.total_cost == b.total_cost;
}

/// Accumulated execution time per VM, seconds.
struct LoadTable {
    std::vector<double> load_of;
};

/// Execution time of a task on a VM: length / mips.
double execution_time(const Task& task, const Vm& vm);

/// Per-VM accumulated execution time under an assignment. VMs with no
/// tasks have load 0.
LoadTable load_table(std::span<const Task> tasks, std::span<const Vm> vms,
                     const Assignment& a);

/// Largest per-VM completion time. Throws std::invalid_argument on an
/// empty table.
double makespan(const LoadTable& lt);

/// Tasks completed per second. n = 0 yields 0 for any makespan; throws
/// std::invalid_argument when makespan is 0 with n > 0.
double throughput(std::size_t n, double makespan);

/// Population standard deviation of the per-VM loads.
double load_deviation(const LoadTable& lt);

/// Memory + storage expense accumulated over each VM's completion time.
double running_cost(std::span<const Vm> vms, const LoadTable& lt,
                    const CostRates& rates);

/// Transfer-time expense: per VM, total assigned payload bytes divided by
/// the VM's bandwidth (Mbps converted to bytes/s), priced at P3.
double bandwidth_cost(std::span<const Task> tasks, std::span<const Vm> vms,
                      const Assignment& a, const CostRates& rates);

/// All three objectives of an assignment. Pure: identical inputs give
/// identical outputs.
ObjectiveVector evaluate(std::span<const Task> tasks, std::span<const Vm> vms,
                         const Assignment& a, const CostRates& rates);

} // namespace swarmsched

#endif // SWARMSCHED_MODEL_HPP
