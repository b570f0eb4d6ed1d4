#pragma once

#include <utility>

#include "travwave/model.hpp"

namespace travwave {

// Explicit-Euler method-of-lines configuration for the delayed PDE
//   du/dt = D u_xx + f(u(x,t), u(x,t-tau)),
// with Dirichlet clamping to the asymptotes (0 on the left, K on the right).
struct SimConfig {
    double x_left = 0.0;
    double x_right = 0.0;
    double dx = 0.05;
    double dt = 0.0;            // <= 0: auto 0.4*dx^2/max(D)
    double T = 10.0;
    int track_component = 0;    // level K/2 crossing of this component
    int snapshot_count = 21;
    int position_samples = 200;
    double cfl_safety = 0.4;
};

struct SimResult {
    int n = 0;
    std::vector<double> xs;
    std::vector<double> snapshot_times;
    std::vector<std::vector<double>> snapshots; // each n*nodes, row-major
    std::vector<std::pair<double, double>> front_positions; // (time, crossing x)
    double measured_speed = 0.0; // positive = profile translates left at that speed
    double speed_r2 = 0.0;
};

// Window and step defaults derived from the profile: enough room for 4x the
// transition width plus the distance travelled in time T.
SimConfig default_sim_config(const ModelSpec& m, const Profile& front, double T = 10.0,
                             double dx = 0.05);

// Integrates forward from u(x,0) = phi(x) with history u(x,t) = phi(x + c t)
// for t in [-tau, 0] (traveling-wave ansatz).  The delay term reads a rolling
// history ring buffer with linear interpolation in time.
SimResult simulate(const ModelSpec& m, const Profile& front, const SimConfig& cfg);

struct SpeedFit {
    double speed = 0.0; // translation speed, positive for the wave ansatz phi(x + c t)
    double r2 = 0.0;
};

// Least-squares line through the recorded (time, crossing) pairs; at least 10
// positions required.  For u(x,t) = phi(x + c t) the crossing moves left, so
// speed = -slope.
SpeedFit front_speed(const SimResult& result);

// Max over snapshots and components of |u(x, t) - phi(x + c t)|.
double profile_drift(const SimResult& result, const Profile& phi, double c);

} // namespace travwave
