#include "travwave/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>

#include <json.hpp>

namespace travwave {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

double now_seconds() {
    using namespace std::chrono;
    return duration<double>(steady_clock::now().time_since_epoch()).count();
}

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json report_json(const VerificationReport& r) {
    return json{{"max_violation", r.max_violation},
                {"worst_node", r.worst_node},
                {"checked_nodes", r.checked_nodes},
                {"knot_slope_jump", r.knot_slope_jump}};
}

void write_profile_csv(const fs::path& path, const Profile& p) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write " + path.string());
    out << "t";
    for (int i = 1; i <= p.n; ++i) out << ",phi" << i;
    out << "\n";
    for (int k = 0; k < p.grid.count; ++k) {
        out << fmt17(p.grid.node(k));
        for (int i = 0; i < p.n; ++i) out << "," << fmt17(p.at(i, k));
        out << "\n";
    }
}

void write_trace_csv(const fs::path& path, const IterationReport& rep) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write " + path.string());
    out << "step,delta,residual,violation\n";
    for (size_t s = 0; s < rep.deltas.size(); ++s)
        out << (s + 1) << "," << fmt17(rep.deltas[s]) << "," << fmt17(rep.residuals[s]) << ","
            << fmt17(rep.ordering_violations[s]) << "\n";
}

void write_snapshots(const fs::path& dir, const SimResult& res) {
    fs::create_directories(dir);
    for (size_t s = 0; s < res.snapshots.size(); ++s) {
        char name[64];
        std::snprintf(name, sizeof(name), "snapshot_%03zu.csv", s);
        std::ofstream out(dir / name);
        if (!out) throw ConfigError("cannot write snapshot " + std::string(name));
        out << "t,x";
        for (int i = 1; i <= res.n; ++i) out << ",u" << i;
        out << "\n";
        const int nodes = static_cast<int>(res.xs.size());
        for (int j = 0; j < nodes; ++j) {
            out << fmt17(res.snapshot_times[s]) << "," << fmt17(res.xs[static_cast<size_t>(j)]);
            for (int i = 0; i < res.n; ++i)
                out << "," << fmt17(res.snapshots[s][static_cast<size_t>(i) * nodes + j]);
            out << "\n";
        }
    }
}

int run_guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const CertificationError& e) {
        std::fprintf(stderr, "certification failure: %s\n", e.what());
        return exit_certification;
    } catch (const MonotonicityError& e) {
        std::fprintf(stderr, "monotonicity failure: %s\n", e.what());
        return exit_convergence;
    } catch (const ConvergenceError& e) {
        std::fprintf(stderr, "convergence failure: %s\n", e.what());
        return exit_convergence;
    } catch (const SimulationError& e) {
        std::fprintf(stderr, "simulation failure: %s\n", e.what());
        return exit_simulation;
    } catch (const Error& e) {
        std::fprintf(stderr, "validation failure: %s\n", e.what());
        return exit_validation;
    }
}

} // namespace

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config: parse error: ") + e.what());
    }

    RunConfig cfg;
    if (!j.contains("model")) throw ConfigError("config: missing \"model\"");
    cfg.model = j.at("model").get<std::string>();
    const json params = j.value("params", json::object());
    if (cfg.model == "predator_prey") {
        PredatorPreyParams p;
        p.d1 = params.value("d1", p.d1);
        p.d2 = params.value("d2", p.d2);
        p.r = params.value("r", p.r);
        p.P = params.value("P", p.P);
        p.a = params.value("a", p.a);
        p.b = params.value("b", p.b);
        p.nu = params.value("nu", p.nu);
        p.tau = params.value("tau", p.tau);
        pp_validate(p);
        cfg.pp = p;
    } else if (cfg.model == "belousov_zhabotinskii") {
        BZParams p;
        p.r = params.value("r", p.r);
        p.b = params.value("b", p.b);
        p.tau = params.value("tau", p.tau);
        bz_validate(p);
        cfg.bz = p;
    } else {
        throw ConfigError("config: unknown model \"" + cfg.model + "\"");
    }

    cfg.c = j.value("c", 0.0);
    if (j.contains("grid")) {
        cfg.grid_L = j.at("grid").value("L", cfg.grid_L);
        cfg.grid_h = j.at("grid").value("h", cfg.grid_h);
    }
    if (j.contains("iteration")) {
        cfg.iteration.epsilon = j.at("iteration").value("epsilon", cfg.iteration.epsilon);
        cfg.iteration.max_steps = j.at("iteration").value("max_steps", cfg.iteration.max_steps);
    }
    if (j.contains("lower")) {
        cfg.lower_k = j.at("lower").value("k", cfg.lower_k);
        cfg.lower_alpha = j.at("lower").value("alpha", cfg.lower_alpha);
    }
    if (j.contains("simulate")) {
        SimulateSettings s;
        const auto& js = j.at("simulate");
        s.T = js.value("T", s.T);
        s.dx = js.value("dx", s.dx);
        s.dt = js.value("dt", s.dt);
        if (js.contains("x_left")) s.x_left = js.at("x_left").get<double>();
        if (js.contains("x_right")) s.x_right = js.at("x_right").get<double>();
        if (!(s.T > 0.0)) throw ConfigError("config: simulate.T must be > 0");
        cfg.sim = s;
    }
    cfg.cert_tol = j.value("cert_tol", cfg.cert_tol);
    cfg.qm_trials = j.value("qm_trials", cfg.qm_trials);
    cfg.output_dir = j.value("output_dir", cfg.output_dir);
    cfg.seed = j.value("seed", cfg.seed);

    if (!(cfg.grid_L > 0.0) || !(cfg.grid_h > 0.0))
        throw ConfigError("config: grid.L and grid.h must be positive");
    if (!(cfg.iteration.epsilon > 0.0) || cfg.iteration.max_steps < 1)
        throw ConfigError("config: iteration.epsilon > 0 and max_steps >= 1 required");
    if (cfg.qm_trials < 1) throw ConfigError("config: qm_trials must be >= 1");
    return cfg;
}

double resolve_speed(const RunConfig& cfg) {
    if (cfg.c > 0.0) return cfg.c;
    if (cfg.c < 0.0) throw ConfigError("config: c must be >= 0 (0 = threshold + 10%)");
    if (cfg.pp) return 1.1 * std::max(pp_cstar(*cfg.pp).value, std::sqrt(4.0 * cfg.pp->d1 * cfg.pp->r));
    return 1.1 * bz_admissible_speed(*cfg.bz);
}

Assembled assemble(const RunConfig& cfg) {
    Assembled a;
    a.c = resolve_speed(cfg);
    a.grid = make_window(cfg.grid_L, cfg.grid_h);
    if (cfg.pp) {
        const auto cs = pp_cstar(*cfg.pp);
        a.cstar = cs.value;
        a.corollary_branch = cs.corollary_branch;
        a.model = pp_model(*cfg.pp, a.c);
        a.upper = pp_upper(*cfg.pp, a.c, a.grid, cfg.cert_tol);
        a.lower = pp_lower(*cfg.pp, a.c, a.grid, cfg.lower_k, cfg.lower_alpha, cfg.cert_tol);
    } else {
        a.cstar = bz_admissible_speed(*cfg.bz);
        a.model = bz_model(*cfg.bz, a.c);
        a.upper = bz_upper(*cfg.bz, a.c, a.grid, cfg.cert_tol);
        a.lower = bz_lower(*cfg.bz, a.c, a.grid, cfg.lower_k, cfg.lower_alpha, cfg.cert_tol);
    }
    a.qm_violation = check_quasi_monotone(a.model, cfg.qm_trials, cfg.seed);
    if (a.qm_violation < -1e-9)
        throw CertificationError("quasi-monotonicity condition failed (worst expression value " +
                                     std::to_string(a.qm_violation) + ")",
                                 -a.qm_violation, 0.0);
    return a;
}

int cmd_cstar(const RunConfig& cfg) {
    return run_guarded([&]() {
        if (cfg.pp) {
            const auto cs = pp_cstar(*cfg.pp);
            std::printf("c* = %.17g%s\n", cs.value,
                        cs.corollary_branch ? " (Corollary branch: nu/b < P < 1/2)"
                                            : " (max-formula branch)");
        } else {
            const double cs = bz_admissible_speed(*cfg.bz);
            std::printf("admissible c > max(2, b) = %.17g\n", cs);
        }
        return exit_ok;
    });
}

namespace {

json assembled_json(const RunConfig& cfg, const Assembled& a) {
    json j;
    j["model"] = cfg.model;
    j["c"] = a.c;
    j["cstar"] = a.cstar;
    j["cstar_corollary_branch"] = a.corollary_branch;
    j["beta"] = a.model.beta;
    j["seed"] = cfg.seed;
    j["grid"] = {{"L", cfg.grid_L}, {"h", cfg.grid_h}};
    j["certification"] = {{"upper", report_json(a.upper.report)},
                          {"lower", report_json(a.lower.report)},
                          {"lower_alpha", a.lower.alpha_used},
                          {"quasi_monotone_violation", a.qm_violation},
                          {"qm_trials", cfg.qm_trials}};
    return j;
}

} // namespace

int cmd_verify(const RunConfig& cfg) {
    return run_guarded([&]() {
        const auto a = assemble(cfg);
        fs::create_directories(cfg.output_dir);
        json j = assembled_json(cfg, a);
        std::ofstream out(fs::path(cfg.output_dir) / "verify.json");
        out << j.dump(2) << "\n";
        std::printf("verify: upper violation %.3e, lower violation %.3e, (A) worst %.3e\n",
                    a.upper.report.max_violation, a.lower.report.max_violation, a.qm_violation);
        return exit_ok;
    });
}

int cmd_solve(const RunConfig& cfg) {
    return run_guarded([&]() {
        const double t0 = now_seconds();
        const auto a = assemble(cfg);
        const double t1 = now_seconds();
        auto rep = iterate(a.model, a.upper.profile, a.lower.profile, cfg.iteration);
        const double t2 = now_seconds();
        if (!rep.converged)
            throw ConvergenceError("solve: iteration stopped without meeting the residual rule");

        fs::create_directories(cfg.output_dir);
        write_profile_csv(fs::path(cfg.output_dir) / "profile.csv", rep.final_profile);
        write_trace_csv(fs::path(cfg.output_dir) / "trace.csv", rep);

        json j = assembled_json(cfg, a);
        j["iteration"] = {{"steps", rep.steps},
                          {"converged", rep.converged},
                          {"final_delta", rep.deltas.back()},
                          {"final_residual", rep.residuals.back()},
                          {"max_ordering_violation",
                           *std::max_element(rep.ordering_violations.begin(),
                                             rep.ordering_violations.end())},
                          {"max_derivative_ratio",
                           *std::max_element(rep.derivative_ratios.begin(),
                                             rep.derivative_ratios.end())}};
        std::ofstream out(fs::path(cfg.output_dir) / "summary.json");
        out << j.dump(2) << "\n";

        std::ofstream log(fs::path(cfg.output_dir) / "run.log");
        log << "certification_seconds " << (t1 - t0) << "\n"
            << "iteration_seconds " << (t2 - t1) << "\n";

        std::printf("solve: converged in %ld steps, final delta %.3e, residual %.3e\n", rep.steps,
                    rep.deltas.back(), rep.residuals.back());
        return exit_ok;
    });
}

int cmd_simulate(const RunConfig& cfg) {
    return run_guarded([&]() {
        const double t0 = now_seconds();
        const auto a = assemble(cfg);
        auto rep = iterate(a.model, a.upper.profile, a.lower.profile, cfg.iteration);
        if (!rep.converged)
            throw ConvergenceError("simulate: solve stage did not converge");

        SimulateSettings s = cfg.sim.value_or(SimulateSettings{});
        SimConfig sim_cfg = default_sim_config(a.model, rep.final_profile, s.T, s.dx);
        if (s.dt > 0.0) sim_cfg.dt = s.dt;
        if (s.x_left) sim_cfg.x_left = *s.x_left;
        if (s.x_right) sim_cfg.x_right = *s.x_right;
        const auto res = simulate(a.model, rep.final_profile, sim_cfg);
        const double drift = profile_drift(res, rep.final_profile, a.c);
        const double t1 = now_seconds();

        fs::create_directories(cfg.output_dir);
        write_profile_csv(fs::path(cfg.output_dir) / "profile.csv", rep.final_profile);
        write_trace_csv(fs::path(cfg.output_dir) / "trace.csv", rep);
        write_snapshots(fs::path(cfg.output_dir) / "snapshots", res);

        json j = assembled_json(cfg, a);
        j["iteration"] = {{"steps", rep.steps},
                          {"converged", rep.converged},
                          {"final_delta", rep.deltas.back()},
                          {"final_residual", rep.residuals.back()}};
        j["simulation"] = {{"T", sim_cfg.T},
                           {"dx", sim_cfg.dx},
                           {"dt", sim_cfg.dt},
                           {"x_left", sim_cfg.x_left},
                           {"x_right", sim_cfg.x_right},
                           {"measured_speed", res.measured_speed},
                           {"speed_r2", res.speed_r2},
                           {"profile_drift", drift},
                           {"front_positions", res.front_positions.size()},
                           {"snapshots", res.snapshots.size()}};
        std::ofstream out(fs::path(cfg.output_dir) / "summary.json");
        out << j.dump(2) << "\n";
        std::ofstream log(fs::path(cfg.output_dir) / "run.log");
        log << "total_seconds " << (t1 - t0) << "\n";

        std::printf("simulate: measured speed %.6f (target %.6f), R^2 %.6f, drift %.3e\n",
                    res.measured_speed, a.c, res.speed_r2, drift);
        return exit_ok;
    });
}

int cmd_counterexample() {
    return run_guarded([]() {
        const Grid grid = make_window(10.0, 0.01);
        const auto rep = counterexample_nonuniqueness(grid);
        std::printf("example 1 (y'' - y = 0, y = e^{-|t|}):\n");
        std::printf("  off-knot residual  %.6e\n", rep.max_offknot_residual);
        std::printf("  sup norm           %.17g\n", rep.sup_norm);
        std::printf("  derivative jump    %.17g\n", rep.derivative_jump_at_zero);
        const auto idr = ma_identity_discrepancy(grid);
        std::printf("variation-of-constants identity, non-C1 instance:\n");
        std::printf("  discrepancy at t=0 %.17g\n", idr.at_zero);
        std::printf("  max discrepancy    %.6e (grows like e^{|t|} on the window)\n",
                    idr.max_discrepancy);
        const auto smooth = ma_identity_discrepancy_smooth(grid);
        std::printf("C1 control (y = 0):  max discrepancy %.6e\n", smooth.max_discrepancy);
        const GreenKernel k = make_kernel_ode(0.0, -1.0);
        std::vector<double> zero(static_cast<size_t>(grid.count), 0.0);
        const auto u = apply_green(k, grid, zero, ScalarTail{0.0, 0.0, 1.0, 1.0});
        double worst = 0.0;
        for (double v : u) worst = std::max(worst, std::abs(v));
        std::printf("G(0) sup norm        %.6e (unique generalized solution is 0)\n", worst);
        return exit_ok;
    });
}

} // namespace travwave
