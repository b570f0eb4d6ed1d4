#pragma once

#include <optional>
#include <string>

#include "travwave/bz.hpp"
#include "travwave/iterate.hpp"
#include "travwave/predator_prey.hpp"
#include "travwave/simulate.hpp"

namespace travwave {

// Exit-code contract shared by the CLI commands.
enum ExitCode : int {
    exit_ok = 0,
    exit_validation = 2,
    exit_certification = 3,
    exit_convergence = 4,
    exit_simulation = 5,
};

struct SimulateSettings {
    double T = 10.0;
    double dx = 0.05;
    double dt = 0.0; // auto
    std::optional<double> x_left, x_right;
};

struct RunConfig {
    std::string model; // "predator_prey" | "belousov_zhabotinskii"
    std::optional<PredatorPreyParams> pp;
    std::optional<BZParams> bz;
    double c = 0.0; // 0 = use c* (admissible threshold) + 10%
    double grid_L = 40.0;
    double grid_h = 0.01;
    IterationOptions iteration;
    double cert_tol = 1e-6;
    long qm_trials = 100000;
    double lower_k = -1.0;
    double lower_alpha = -1.0;
    std::optional<SimulateSettings> sim;
    std::string output_dir = "out";
    unsigned long long seed = 12345;
};

RunConfig load_config(const std::string& path);

// Resolved pieces of one run: model with the chosen speed plus both
// certified candidates.
struct Assembled {
    ModelSpec model;
    double c = 0.0;
    double cstar = 0.0;
    bool corollary_branch = false;
    Grid grid;
    CertifiedFront upper;
    CertifiedFront lower;
    double qm_violation = 0.0;
};

double resolve_speed(const RunConfig& cfg);
Assembled assemble(const RunConfig& cfg);

// Subcommands; they print a short report and write machine-readable outputs
// under cfg.output_dir.  Each returns the exit code.
int cmd_cstar(const RunConfig& cfg);
int cmd_verify(const RunConfig& cfg);
int cmd_solve(const RunConfig& cfg);
int cmd_simulate(const RunConfig& cfg);
int cmd_counterexample();

} // namespace travwave
