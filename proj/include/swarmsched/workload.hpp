#ifndef SWARMSCHED_WORKLOAD_HPP
#define SWARMSCHED_WORKLOAD_HPP

#include <cstdint>
#include <istream>
#include <span>
#include <vector>

#include "swarmsched/model.hpp"

namespace swarmsched {

/// One usable job record from a Standard Workload Format trace.
/// Consumed fields: 1 (job id), 4 (run time, s), 5 (allocated processors).
struct SwfRecord {
    long job_id = 0;
    double run_time_sec = 0.0;
    int allocated_procs = 0;
};

struct SwfParseResult {
    std::vector<SwfRecord> records;
    std::size_t skipped_lines = 0;   // comments, blanks, malformed lines
    std::size_t dropped_records = 0; // missing (-1) or non-positive values
};

/// Parses line-oriented SWF text: ';' starts a comment, data lines carry at
/// least 18 whitespace-separated numeric fields. Throws EmptyTrace when no
/// valid record survives.
SwfParseResult parse_swf(std::istream& in);

struct ClampRange {
    double lo = 15000.0;
    double hi = 500000.0;
};

/// Converts records to tasks: length = clamp(runtime * procs * ref_mips),
/// unit payloads of `payload_bytes` on both sides, sequential ids.
std::vector<Task> swf_to_tasks(std::span<const SwfRecord> records, double ref_mips,
                               ClampRange clamp = {}, double payload_bytes = 300.0);

/// Knobs for synthetic workloads and VM fleets.
struct SynthSpec {
    std::size_t n_tasks = 200;
    double length_lo_mi = 15000.0;
    double length_hi_mi = 500000.0;
    int vm_count_lo = 32;
    int vm_count_hi = 64;
    double mips_lo = 500.0;
    double mips_hi = 10000.0;
    double ram_mb = 512.0;
    double storage_lo_mb = 3072.0;
    double storage_hi_mb = 10240.0;
    double bw_mbps = 1000.0;
    double payload_bytes = 300.0;
    std::uint64_t seed = 1;
};

/// Tasks with lengths uniform over the configured range; deterministic per seed.
std::vector<Task> synth_tasks(const SynthSpec& spec);

/// A VM fleet drawn from the configured ranges; deterministic per seed.
std::vector<Vm> build_vms(const SynthSpec& spec);

} // namespace swarmsched

#endif // SWARMSCHED_WORKLOAD_HPP
