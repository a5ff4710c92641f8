#ifndef SWARMSCHED_CLI_HPP
#define SWARMSCHED_CLI_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "swarmsched/model.hpp"

namespace swarmsched::cli {

/// Parses a scale expression: "200" or a sweep "100..500:100".
/// Throws std::invalid_argument on malformed input.
std::vector<std::size_t> parse_task_sweep(const std::string& expr);

/// Parses "P1,P2,P3" into cost rates.
CostRates parse_prices(const std::string& expr);

struct RunOptions {
    std::vector<std::string> algos = {"phwsoa"};
    std::string trace_path;              // exactly one of trace / synth
    bool synth = false;
    std::vector<std::size_t> task_counts; // empty: synth -> {200}, trace -> all records
    int vms = 0;                          // 0 = draw fleet size from the default range
    std::size_t seeds = 1;                // consecutive master seeds starting at `seed`
    std::uint64_t seed = 1;
    std::size_t iters = 100;
    std::size_t pop = 50;
    double pm = 0.05;
    double ref_mips = 1000.0;
    CostRates rates;
    int parallelism = 0;
    double timeout_secs = 60.0;
    std::string out_dir = ".";
};

/// Benchmark pipeline: runs every algo x seed x scale combination, writes
/// results.csv and pareto_front.csv under out_dir and prints a summary.
/// Returns 0 on success, 2 on usage errors, 1 on runtime failures.
int run_command(const RunOptions& opts, std::ostream& out, std::ostream& err);

struct OracleOptions {
    std::vector<std::string> algos = {"phwsoa"};
    std::size_t tasks = 6;
    int vms = 3;
    std::size_t seeds = 1;
    std::uint64_t seed = 1;
    std::size_t iters = 100;
    std::size_t pop = 50;
    double pm = 0.05;
    CostRates rates;
    int parallelism = 0;
    double timeout_secs = 60.0;
    std::string out_dir = ".";
};

/// Desk-scale verification: exhaustive front per seed, each algorithm scored
/// by hypervolume ratio and true-front coverage into quality.csv.
int oracle_command(const OracleOptions& opts, std::ostream& out, std::ostream& err);

} // namespace swarmsched::cli

#endif // SWARMSCHED_CLI_HPP
