#include "swarmsched/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace swarmsched {

std::string format_double(double v) {
    char buf[64];
    // shortest form that still parses back to the same double
    for (int precision = 15; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

void write_results_csv(std::ostream& out, std::span<const RunResult> results) {
    out << "algo,seed,n,m,makespan,loadDeviation,totalCost,throughput,evaluations,frontierSize\n";
    for (const RunResult& r : results) {
        out << r.algo << ',' << r.seed << ',' << r.n << ',' << r.m << ','
            << format_double(r.metrics.makespan) << ','
            << format_double(r.metrics.load_deviation) << ','
            << format_double(r.metrics.total_cost) << ','
            << format_double(r.metrics.throughput) << ','
            << r.metrics.evaluations << ','
            << r.frontier.size() << '\n';
    }
}

void write_frontier_csv(std::ostream& out, std::span<const RunResult> results) {
    out << "algo,seed,n,m,entry,makespan,loadDeviation,totalCost,assignment\n";
    for (const RunResult& r : results) {
        const auto& entries = r.frontier.entries();
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const ArchiveEntry& e = entries[i];
            out << r.algo << ',' << r.seed << ',' << r.n << ',' << r.m << ',' << i << ','
                << format_double(e.objectives.makespan) << ','
                << format_double(e.objectives.load_deviation) << ','
                << format_double(e.objectives.total_cost) << ",\"";
            for (std::size_t g = 0; g < e.assignment.vm_of.size(); ++g) {
                if (g > 0) out << ' ';
                out << e.assignment.vm_of[g];
            }
            out << "\"\n";
        }
    }
}

void write_quality_csv(std::ostream& out, std::span<const QualityRow> rows) {
    out << "algo,seed,n,m,hvRatio,coverage,frontierSize,trueFrontSize\n";
    for (const QualityRow& q : rows) {
        out << q.algo << ',' << q.seed << ',' << q.n << ',' << q.m << ','
            << format_double(q.hv_ratio) << ',' << format_double(q.coverage) << ','
            << q.frontier_size << ',' << q.true_front_size << '\n';
    }
}

void print_summary(std::ostream& out, std::span<const RunResult> results) {
    char line[256];
    std::snprintf(line, sizeof(line), "%-8s %6s %6s %5s %12s %12s %12s %10s %9s %8s",
                  "algo", "seed", "n", "m", "makespan", "loadDev", "cost", "thrput",
                  "wall(ms)", "evals");
    out << line << '\n';
    for (const RunResult& r : results) {
        std::snprintf(line, sizeof(line),
                      "%-8s %6llu %6zu %5zu %12.3f %12.3f %12.3f %10.4f %9.1f %8zu",
                      r.algo.c_str(), static_cast<unsigned long long>(r.seed), r.n, r.m,
                      r.metrics.makespan, r.metrics.load_deviation, r.metrics.total_cost,
                      r.metrics.throughput, r.metrics.wall_millis, r.metrics.evaluations);
        out << line << '\n';
    }
}

} // namespace swarmsched
