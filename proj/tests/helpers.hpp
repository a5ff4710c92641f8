#ifndef SWARMSCHED_TESTS_HELPERS_HPP
#define SWARMSCHED_TESTS_HELPERS_HPP

#include <vector>

#include "swarmsched/model.hpp"
#include "swarmsched/rng.hpp"

namespace testutil {

inline swarmsched::Task make_task(int id, double length_mi, double file_b = 0.0,
                                  double output_b = 0.0) {
    swarmsched::Task t;
    t.id = id;
    t.length_mi = length_mi;
    t.pes_number = 1;
    t.file_size_b = file_b;
    t.output_size_b = output_b;
    return t;
}

inline swarmsched::Vm make_vm(int id, double mips, double ram_mb = 512.0,
                              double storage_mb = 3072.0, double bw_mbps = 1000.0) {
    swarmsched::Vm vm;
    vm.id = id;
    vm.mips = mips;
    vm.pes_number = 1;
    vm.ram_mb = ram_mb;
    vm.storage_mb = storage_mb;
    vm.bw_mbps = bw_mbps;
    return vm;
}

inline std::vector<swarmsched::Task> random_tasks(std::size_t n, swarmsched::Rng& rng) {
    std::vector<swarmsched::Task> tasks;
    for (std::size_t i = 0; i < n; ++i)
        tasks.push_back(make_task(static_cast<int>(i), rng.uniform(100.0, 5000.0),
                                  rng.uniform(0.0, 1e6), rng.uniform(0.0, 1e6)));
    return tasks;
}

inline std::vector<swarmsched::Vm> random_vms(std::size_t m, swarmsched::Rng& rng) {
    std::vector<swarmsched::Vm> vms;
    for (std::size_t j = 0; j < m; ++j)
        vms.push_back(make_vm(static_cast<int>(j), rng.uniform(100.0, 2000.0),
                              512.0, rng.uniform(3072.0, 10240.0)));
    return vms;
}

inline swarmsched::Assignment random_assignment(std::size_t n, std::size_t m,
                                                swarmsched::Rng& rng) {
    swarmsched::Assignment a;
    a.vm_of.resize(n);
    for (int& g : a.vm_of) g = static_cast<int>(rng.uniform_index(m));
    return a;
}

} // namespace testutil

#endif // SWARMSCHED_TESTS_HELPERS_HPP
