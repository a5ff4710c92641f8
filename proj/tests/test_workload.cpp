#include <sstream>
#include <string>

#include "doctest.h"
#include "swarmsched/errors.hpp"
#include "swarmsched/workload.hpp"

using namespace swarmsched;

namespace {

// 18-field SWF data line with the given id, runtime and processor count.
std::string swf_line(long id, double runtime, int procs) {
    std::ostringstream os;
    os << id << " 0 10 " << runtime << ' ' << procs << " -1 -1 " << procs
       << " -1 -1 1 1 1 1 1 -1 -1 -1";
    return os.str();
}

} // namespace

TEST_CASE("parse_swf keeps valid records and counts the rest") {
    std::ostringstream trace;
    trace << "; Version: 2.2\n";
    trace << ";   a header comment\n";
    trace << swf_line(1, 100.0, 4) << '\n';
    trace << "2 0 10 50\n";                 // too few fields
    trace << swf_line(3, -1.0, 8) << '\n';  // missing runtime
    trace << swf_line(4, 30.0, -1) << '\n'; // missing processors
    trace << swf_line(5, 7.5, 1) << '\n';
    trace << "6 0 10 x 4 -1 -1 4 -1 -1 1 1 1 1 1 -1 -1 -1\n"; // unparsable field
    trace << "\n";

    std::istringstream in(trace.str());
    const SwfParseResult result = parse_swf(in);
    REQUIRE(result.records.size() == 2);
    CHECK(result.records[0].job_id == 1);
    CHECK(result.records[0].run_time_sec == 100.0);
    CHECK(result.records[0].allocated_procs == 4);
    CHECK(result.records[1].job_id == 5);
    CHECK(result.records[1].run_time_sec == 7.5);
    CHECK(result.skipped_lines == 5); // 2 comments + short line + bad numeric + blank
    CHECK(result.dropped_records == 2);
}

TEST_CASE("parse_swf rejects an empty trace") {
    std::istringstream in("; nothing but comments\n;\n");
    CHECK_THROWS_AS(parse_swf(in), EmptyTrace);
}

TEST_CASE("swf_to_tasks converts and clamps lengths") {
    const std::vector<SwfRecord> records = {
        {1, 100.0, 4},     // 400000 MI, in range
        {2, 1.0, 1},       // 1000 MI, clamped up
        {3, 1000000.0, 8}, // way over, clamped down
    };
    const auto tasks = swf_to_tasks(records, 1000.0);
    REQUIRE(tasks.size() == records.size());
    CHECK(tasks[0].length_mi == 400000.0);
    CHECK(tasks[1].length_mi == 15000.0);
    CHECK(tasks[2].length_mi == 500000.0);
    CHECK(tasks[0].id == 0);
    CHECK(tasks[2].id == 2);
    for (const Task& t : tasks) {
        CHECK(t.pes_number == 1);
        CHECK(t.file_size_b == 300.0);
        CHECK(t.output_size_b == 300.0);
    }
}

TEST_CASE("synth_tasks ranges and determinism") {
    SynthSpec spec;
    spec.n_tasks = 500;
    spec.seed = 11;
    const auto tasks = synth_tasks(spec);
    REQUIRE(tasks.size() == 500);
    for (const Task& t : tasks) {
        CHECK(t.length_mi >= 15000.0);
        CHECK(t.length_mi <= 500000.0);
    }
    const auto again = synth_tasks(spec);
    for (std::size_t i = 0; i < tasks.size(); ++i)
        CHECK(tasks[i].length_mi == again[i].length_mi);

    spec.seed = 12;
    const auto other = synth_tasks(spec);
    bool any_differ = false;
    for (std::size_t i = 0; i < tasks.size(); ++i)
        any_differ = any_differ || tasks[i].length_mi != other[i].length_mi;
    CHECK(any_differ);
}

TEST_CASE("build_vms ranges and determinism") {
    SynthSpec spec;
    spec.seed = 21;
    const auto vms = build_vms(spec);
    CHECK(vms.size() >= 32);
    CHECK(vms.size() <= 64);
    for (const Vm& vm : vms) {
        CHECK(vm.mips >= 500.0);
        CHECK(vm.mips <= 10000.0);
        CHECK(vm.ram_mb == 512.0);
        CHECK(vm.storage_mb >= 3072.0);
        CHECK(vm.storage_mb <= 10240.0);
        CHECK(vm.bw_mbps == 1000.0);
    }
    for (std::size_t j = 0; j < vms.size(); ++j)
        CHECK(vms[j].id == static_cast<int>(j));

    const auto again = build_vms(spec);
    REQUIRE(again.size() == vms.size());
    for (std::size_t j = 0; j < vms.size(); ++j)
        CHECK(vms[j].mips == again[j].mips);

    SynthSpec fixed = spec;
    fixed.vm_count_lo = fixed.vm_count_hi = 32;
    CHECK(build_vms(fixed).size() == 32);
}
