// Benchmark CLI for the multi-objective cloud task scheduler.

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "swarmsched/cli.hpp"

namespace {

struct RawRunFlags {
    std::string algos = "phwsoa";
    std::string tasks_expr;
    std::string prices_expr;
};

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const std::size_t comma = s.find(',', pos);
        const std::size_t end = (comma == std::string::npos) ? s.size() : comma;
        if (end > pos) parts.push_back(s.substr(pos, end - pos));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return parts;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"swarmsched - multi-objective cloud task scheduling benchmarks"};
    app.require_subcommand(1);

    swarmsched::cli::RunOptions run_opts;
    RawRunFlags run_raw;
    CLI::App* run_cmd = app.add_subcommand("run", "run scheduling algorithms and emit CSV reports");
    run_cmd->set_config("--config", "", "key=value config file (flags take precedence)");
    run_cmd->add_option("--algo", run_raw.algos, "comma list: phwsoa|woa|soa|ga|random");
    run_cmd->add_option("--trace", run_opts.trace_path, "SWF trace file as task source");
    run_cmd->add_flag("--synth", run_opts.synth, "synthesize tasks instead of a trace");
    run_cmd->add_option("--tasks", run_raw.tasks_expr, "task count N or sweep A..B:STEP");
    run_cmd->add_option("--vms", run_opts.vms, "fixed VM count (default: draw from 32..64)");
    run_cmd->add_option("--seeds", run_opts.seeds, "number of consecutive seeds");
    run_cmd->add_option("--seed", run_opts.seed, "first master seed")
        ->envname("SWARMSCHED_SEED");
    run_cmd->add_option("--iters", run_opts.iters, "iterations per run");
    run_cmd->add_option("--pop", run_opts.pop, "population size per species");
    run_cmd->add_option("--pm", run_opts.pm, "mutation probability");
    run_cmd->add_option("--ref-mips", run_opts.ref_mips, "MI per cpu-second for trace conversion");
    run_cmd->add_option("--prices", run_raw.prices_expr, "cost rates P1,P2,P3");
    run_cmd->add_option("--parallelism", run_opts.parallelism, "worker threads (0 = auto)");
    run_cmd->add_option("--timeout-secs", run_opts.timeout_secs, "per-iteration wall-clock budget");
    run_cmd->add_option("--out", run_opts.out_dir, "output directory");

    swarmsched::cli::OracleOptions oracle_opts;
    RawRunFlags oracle_raw;
    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "score algorithms against the exhaustive Pareto front");
    oracle_cmd->set_config("--config", "", "key=value config file (flags take precedence)");
    oracle_cmd->add_option("--algo", oracle_raw.algos, "comma list: phwsoa|woa|soa|ga|random");
    oracle_cmd->add_option("--tasks", oracle_opts.tasks, "task count (must keep m^n <= 1e6)");
    oracle_cmd->add_option("--vms", oracle_opts.vms, "VM count");
    oracle_cmd->add_option("--seeds", oracle_opts.seeds, "number of consecutive seeds");
    oracle_cmd->add_option("--seed", oracle_opts.seed, "first master seed")
        ->envname("SWARMSCHED_SEED");
    oracle_cmd->add_option("--iters", oracle_opts.iters, "iterations per run");
    oracle_cmd->add_option("--pop", oracle_opts.pop, "population size per species");
    oracle_cmd->add_option("--pm", oracle_opts.pm, "mutation probability");
    oracle_cmd->add_option("--prices", oracle_raw.prices_expr, "cost rates P1,P2,P3");
    oracle_cmd->add_option("--parallelism", oracle_opts.parallelism, "worker threads (0 = auto)");
    oracle_cmd->add_option("--timeout-secs", oracle_opts.timeout_secs,
                           "per-iteration wall-clock budget");
    oracle_cmd->add_option("--out", oracle_opts.out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (run_cmd->parsed()) {
            run_opts.algos = split_csv(run_raw.algos);
            if (!run_raw.tasks_expr.empty())
                run_opts.task_counts = swarmsched::cli::parse_task_sweep(run_raw.tasks_expr);
            if (!run_raw.prices_expr.empty())
                run_opts.rates = swarmsched::cli::parse_prices(run_raw.prices_expr);
            return swarmsched::cli::run_command(run_opts, std::cout, std::cerr);
        }
        oracle_opts.algos = split_csv(oracle_raw.algos);
        if (!oracle_raw.prices_expr.empty())
            oracle_opts.rates = swarmsched::cli::parse_prices(oracle_raw.prices_expr);
        return swarmsched::cli::oracle_command(oracle_opts, std::cout, std::cerr);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
