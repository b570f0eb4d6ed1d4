// Batch front end: solve/verify/cstar/simulate/counterexample pipelines over
// a JSON run configuration.
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "travwave/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"travwave: monotone-iteration traveling-wave solver for delayed "
                 "reaction-diffusion systems"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    long long seed = -1;

    auto add_common = [&](CLI::App* cmd, bool needs_config) {
        auto* opt = cmd->add_option("--config", config_path, "run configuration (JSON)");
        if (needs_config) opt->required();
        cmd->add_option("--out", out_dir, "override output directory");
        cmd->add_option("--seed", seed, "override RNG seed");
    };

    auto* solve = app.add_subcommand("solve", "run the monotone iteration to a wave front");
    auto* verify = app.add_subcommand("verify", "certify upper/lower candidates and condition (A)");
    auto* cstar = app.add_subcommand("cstar", "print the admissible speed threshold");
    auto* simulate = app.add_subcommand("simulate", "solve, then integrate the delayed PDE");
    auto* counter = app.add_subcommand("counterexample", "print the non-C1 counterexample reports");
    for (auto* cmd : {solve, verify, cstar, simulate}) add_common(cmd, true);
    add_common(counter, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (counter->parsed()) return travwave::cmd_counterexample();
        travwave::RunConfig cfg = travwave::load_config(config_path);
        if (!out_dir.empty()) cfg.output_dir = out_dir;
        if (seed >= 0) cfg.seed = static_cast<unsigned long long>(seed);
        if (solve->parsed()) return travwave::cmd_solve(cfg);
        if (verify->parsed()) return travwave::cmd_verify(cfg);
        if (cstar->parsed()) return travwave::cmd_cstar(cfg);
        if (simulate->parsed()) return travwave::cmd_simulate(cfg);
    } catch (const travwave::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return travwave::exit_validation;
    }
    return 0;
}
