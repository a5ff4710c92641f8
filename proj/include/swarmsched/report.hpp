#ifndef SWARMSCHED_REPORT_HPP
#define SWARMSCHED_REPORT_HPP

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "swarmsched/engine.hpp"

namespace swarmsched {

/// Locale-independent shortest exact representation ('.' decimal point,
/// round-trips through strtod bit-exactly).
std::string format_double(double v);

/// One row per run: algo, seed, n, m, the chosen solution's objectives and
/// throughput, evaluation count and frontier size. Wall time is deliberately
/// absent so identical flags reproduce identical bytes.
void write_results_csv(std::ostream& out, std::span<const RunResult> results);

/// Every run's frontier, one row per archive entry, the assignment as a
/// quoted space-separated VM index list.
void write_frontier_csv(std::ostream& out, std::span<const RunResult> results);

struct QualityRow {
    std::string algo;
    std::uint64_t seed = 0;
    std::size_t n = 0;
    std::size_t m = 0;
    double hv_ratio = 0.0;
    double coverage = 0.0;
    std::size_t frontier_size = 0;
    std::size_t true_front_size = 0;
};

void write_quality_csv(std::ostream& out, std::span<const QualityRow> rows);

/// Human-oriented run table, including wall time.
void print_summary(std::ostream& out, std::span<const RunResult> results);

} // namespace swarmsched

#endif // SWARMSCHED_REPORT_HPP
