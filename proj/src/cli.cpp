#include "swarmsched/cli.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "swarmsched/baselines.hpp"
#include "swarmsched/errors.hpp"
#include "swarmsched/metrics.hpp"
#include "swarmsched/report.hpp"
#include "swarmsched/workload.hpp"

namespace swarmsched::cli {

namespace {

std::size_t parse_size(std::string_view s) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("expected a non-negative integer, got '" + std::string(s) + "'");
    return value;
}

double parse_real(std::string_view s) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("expected a number, got '" + std::string(s) + "'");
    return value;
}

} // namespace

std::vector<std::size_t> parse_task_sweep(const std::string& expr) {
    const std::size_t dots = expr.find("..");
    if (dots == std::string::npos)
        return {parse_size(expr)};
    const std::size_t colon = expr.find(':', dots + 2);
    if (colon == std::string::npos)
        throw std::invalid_argument("sweep '" + expr + "' needs a step: A..B:STEP");
    const std::size_t lo = parse_size(std::string_view(expr).substr(0, dots));
    const std::size_t hi = parse_size(std::string_view(expr).substr(dots + 2, colon - dots - 2));
    const std::size_t step = parse_size(std::string_view(expr).substr(colon + 1));
    if (step == 0 || lo > hi)
        throw std::invalid_argument("sweep '" + expr + "' must satisfy A <= B and STEP >= 1");
    std::vector<std::size_t> points;
    for (std::size_t v = lo; v <= hi; v += step) points.push_back(v);
    return points;
}

CostRates parse_prices(const std::string& expr) {
    const std::size_t c1 = expr.find(',');
    const std::size_t c2 = expr.find(',', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw std::invalid_argument("prices need three comma-separated values: P1,P2,P3");
    CostRates rates;
    rates.ram_price_per_mb_sec = parse_real(std::string_view(expr).substr(0, c1));
    rates.storage_price_per_mb_sec = parse_real(std::string_view(expr).substr(c1 + 1, c2 - c1 - 1));
    rates.bw_price_per_sec = parse_real(std::string_view(expr).substr(c2 + 1));
    if (rates.ram_price_per_mb_sec < 0 || rates.storage_price_per_mb_sec < 0 ||
        rates.bw_price_per_sec < 0)
        throw std::invalid_argument("prices must be non-negative");
    return rates;
}

namespace {

EngineConfig engine_config(const RunOptions& opts, std::uint64_t seed) {
    EngineConfig cfg;
    cfg.pop_size = opts.pop;
    cfg.max_iter = opts.iters;
    cfg.pm = opts.pm;
    cfg.seed = seed;
    cfg.parallelism = opts.parallelism;
    cfg.batch_timeout_sec = opts.timeout_secs;
    return cfg;
}

SynthSpec synth_spec(std::size_t n_tasks, int vms, std::uint64_t seed) {
    SynthSpec spec;
    spec.n_tasks = n_tasks;
    spec.seed = seed;
    if (vms > 0) {
        spec.vm_count_lo = vms;
        spec.vm_count_hi = vms;
    }
    return spec;
}

struct Workload {
    std::vector<Task> tasks;
    std::vector<Vm> vms;
};

Workload make_workload(const RunOptions& opts, const std::vector<SwfRecord>& records,
                       std::size_t n_tasks, std::uint64_t seed) {
    Workload w;
    if (opts.synth) {
        const SynthSpec spec = synth_spec(n_tasks, opts.vms, seed);
        w.tasks = synth_tasks(spec);
        w.vms = build_vms(spec);
        return w;
    }
    std::span<const SwfRecord> slice(records);
    if (n_tasks > 0 && n_tasks < slice.size()) slice = slice.first(n_tasks);
    w.tasks = swf_to_tasks(slice, opts.ref_mips);
    w.vms = build_vms(synth_spec(0, opts.vms, seed));
    return w;
}

} // namespace

int run_command(const RunOptions& opts, std::ostream& out, std::ostream& err) {
    if (opts.synth == !opts.trace_path.empty()) {
        err << "error: exactly one workload source required (--trace PATH or --synth)\n";
        return 2;
    }
    if (opts.algos.empty()) {
        err << "error: at least one algorithm required\n";
        return 2;
    }

    try {
        std::vector<SwfRecord> records;
        if (!opts.trace_path.empty()) {
            std::ifstream in(opts.trace_path);
            if (!in) {
                err << "error: cannot open trace '" << opts.trace_path << "'\n";
                return 1;
            }
            records = parse_swf(in).records;
        }

        std::vector<std::size_t> scales = opts.task_counts;
        if (scales.empty()) scales = {opts.synth ? std::size_t{200} : std::size_t{0}};

        std::vector<RunResult> results;
        for (std::size_t n_tasks : scales) {
            for (std::uint64_t s = opts.seed; s < opts.seed + opts.seeds; ++s) {
                const Workload w = make_workload(opts, records, n_tasks, s);
                for (const std::string& algo : opts.algos)
                    results.push_back(
                        run_algorithm(algo, w.tasks, w.vms, engine_config(opts, s), opts.rates));
            }
        }

        namespace fs = std::filesystem;
        fs::create_directories(opts.out_dir);
        {
            std::ofstream csv(fs::path(opts.out_dir) / "results.csv");
            write_results_csv(csv, results);
        }
        {
            std::ofstream csv(fs::path(opts.out_dir) / "pareto_front.csv");
            write_frontier_csv(csv, results);
        }
        print_summary(out, results);
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

int oracle_command(const OracleOptions& opts, std::ostream& out, std::ostream& err) {
    if (opts.algos.empty()) {
        err << "error: at least one algorithm required\n";
        return 2;
    }
    try {
        std::vector<QualityRow> rows;
        for (std::uint64_t s = opts.seed; s < opts.seed + opts.seeds; ++s) {
            const SynthSpec spec = synth_spec(opts.tasks, opts.vms, s);
            const std::vector<Task> tasks = synth_tasks(spec);
            const std::vector<Vm> vms = build_vms(spec);
            const std::vector<ObjectiveVector> true_front =
                brute_force_front(tasks, vms, opts.rates, opts.parallelism);

            std::vector<RunResult> runs;
            for (const std::string& algo : opts.algos) {
                EngineConfig cfg;
                cfg.pop_size = opts.pop;
                cfg.max_iter = opts.iters;
                cfg.pm = opts.pm;
                cfg.seed = s;
                cfg.parallelism = opts.parallelism;
                cfg.batch_timeout_sec = opts.timeout_secs;
                runs.push_back(run_algorithm(algo, tasks, vms, cfg, opts.rates));
            }

            // one reference point per seed, over everything observed
            std::vector<ObjectiveVector> observed = true_front;
            for (const RunResult& r : runs)
                for (const ObjectiveVector& o : r.frontier.objectives())
                    observed.push_back(o);
            const ObjectiveVector ref = reference_point(observed);
            const double true_hv = hypervolume(true_front, ref);

            for (const RunResult& r : runs) {
                const std::vector<ObjectiveVector> front = r.frontier.objectives();
                const FrontQuality q = front_quality(front, true_front, ref);
                QualityRow row;
                row.algo = r.algo;
                row.seed = s;
                row.n = opts.tasks;
                row.m = static_cast<std::size_t>(vms.size());
                row.hv_ratio = true_hv > 0.0 ? q.hypervolume / true_hv : 1.0;
                row.coverage = q.coverage_of_true_front;
                row.frontier_size = r.frontier.size();
                row.true_front_size = true_front.size();
                rows.push_back(row);
            }
        }

        namespace fs = std::filesystem;
        fs::create_directories(opts.out_dir);
        {
            std::ofstream csv(fs::path(opts.out_dir) / "quality.csv");
            write_quality_csv(csv, rows);
        }
        write_quality_csv(out, rows);
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace swarmsched::cli
