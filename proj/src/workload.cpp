#include "swarmsched/workload.hpp"

#include <algorithm>
#include <charconv>
#include <string>
#include <string_view>

#include "swarmsched/errors.hpp"
#include "swarmsched/rng.hpp"

namespace swarmsched {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
        std::size_t start = pos;
        while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
        if (pos > start) fields.push_back(line.substr(start, pos - start));
    }
    return fields;
}

bool parse_number(std::string_view s, double& out) {
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

} // namespace

SwfParseResult parse_swf(std::istream& in) {
    SwfParseResult result;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string_view view(line);
        const std::size_t first_char = view.find_first_not_of(" \t");
        if (first_char == std::string_view::npos || view[first_char] == ';') {
            ++result.skipped_lines;
            continue;
        }
        const auto fields = split_fields(view);
        if (fields.size() < 18) {
            ++result.skipped_lines;
            continue;
        }
        double values[18];
        bool ok = true;
        for (std::size_t f = 0; f < 18 && ok; ++f)
            ok = parse_number(fields[f], values[f]);
        if (!ok) {
            ++result.skipped_lines;
            continue;
        }
        const double run_time = values[3];
        const double procs = values[4];
        if (run_time <= 0.0 || procs < 1.0) {
            ++result.dropped_records;
            continue;
        }
        result.records.push_back(SwfRecord{static_cast<long>(values[0]), run_time,
                                           static_cast<int>(procs)});
    }
    if (result.records.empty())
        throw EmptyTrace("parse_swf: no valid record in trace");
    return result;
}

std::vector<Task> swf_to_tasks(std::span<const SwfRecord> records, double ref_mips,
                               ClampRange clamp, double payload_bytes) {
    std::vector<Task> tasks;
    tasks.reserve(records.size());
    int next_id = 0;
    for (const SwfRecord& rec : records) {
        Task t;
        t.id = next_id++;
        t.length_mi = std::clamp(rec.run_time_sec * rec.allocated_procs * ref_mips,
                                 clamp.lo, clamp.hi);
        t.pes_number = 1;
        t.file_size_b = payload_bytes;
        t.output_size_b = payload_bytes;
        tasks.push_back(t);
    }
    return tasks;
}

std::vector<Task> synth_tasks(const SynthSpec& spec) {
    Rng rng(splitmix64_mix(spec.seed ^ 0x7461736B73ULL)); // task stream
    std::vector<Task> tasks;
    tasks.reserve(spec.n_tasks);
    for (std::size_t i = 0; i < spec.n_tasks; ++i) {
        Task t;
        t.id = static_cast<int>(i);
        t.length_mi = rng.uniform(spec.length_lo_mi, spec.length_hi_mi);
        t.pes_number = 1;
        t.file_size_b = spec.payload_bytes;
        t.output_size_b = spec.payload_bytes;
        tasks.push_back(t);
    }
    return tasks;
}

std::vector<Vm> build_vms(const SynthSpec& spec) {
    Rng rng(splitmix64_mix(spec.seed ^ 0x766D73ULL)); // fleet stream
    const std::size_t span = static_cast<std::size_t>(spec.vm_count_hi - spec.vm_count_lo) + 1;
    const int m = spec.vm_count_lo + static_cast<int>(rng.uniform_index(span));
    std::vector<Vm> vms;
    vms.reserve(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        Vm vm;
        vm.id = j;
        vm.mips = rng.uniform(spec.mips_lo, spec.mips_hi);
        vm.pes_number = 1;
        vm.ram_mb = spec.ram_mb;
        vm.storage_mb = rng.uniform(spec.storage_lo_mb, spec.storage_hi_mb);
        vm.bw_mbps = spec.bw_mbps;
        vms.push_back(vm);
    }
    return vms;
}

} // namespace swarmsched
