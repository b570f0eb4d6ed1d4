#include "travwave/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace travwave {

namespace {

// Span between the first 5% and last 95% crossing over all components.
double transition_width(const ModelSpec& m, const Profile& front) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int i = 0; i < m.n; ++i) {
        const double ki = m.K[static_cast<size_t>(i)];
        for (int k = 0; k < front.grid.count; ++k) {
            const double v = front.at(i, k);
            if (v >= 0.05 * ki) {
                lo = std::min(lo, front.grid.node(k));
                break;
            }
        }
        for (int k = front.grid.count - 1; k >= 0; --k) {
            const double v = front.at(i, k);
            if (v <= 0.95 * ki) {
                hi = std::max(hi, front.grid.node(k));
                break;
            }
        }
    }
    if (!std::isfinite(lo) || !std::isfinite(hi) || hi <= lo) return 1.0;
    return hi - lo;
}

double crossing_position(const std::vector<double>& u, const std::vector<double>& xs,
                         double level) {
    for (size_t j = 0; j + 1 < u.size(); ++j) {
        if (u[j] <= level && u[j + 1] > level) {
            const double w = (level - u[j]) / (u[j + 1] - u[j]);
            return xs[j] + w * (xs[j + 1] - xs[j]);
        }
    }
    throw SimulationError("simulate: tracked level crossing left the window");
}

} // namespace

SimConfig default_sim_config(const ModelSpec& m, const Profile& front, double T, double dx) {
    SimConfig cfg;
    cfg.dx = dx;
    cfg.T = T;
    const double width = transition_width(m, front);
    // The wave ansatz phi(x + c t) translates the profile to the left; leave
    // room on the left for the travel and generous clearance on both sides.
    cfg.x_left = front.grid.left - m.c * T - std::max(2.0 * width, 10.0);
    cfg.x_right = front.grid.right() + std::max(2.0 * width, 10.0);
    const double maxd = *std::max_element(m.D.begin(), m.D.end());
    cfg.dt = cfg.cfl_safety * dx * dx / maxd;
    return cfg;
}

SimResult simulate(const ModelSpec& m, const Profile& front, const SimConfig& cfg_in) {
    SimConfig cfg = cfg_in;
    if (front.n != m.n) throw ParameterError("simulate: component count mismatch");
    if (!(cfg.dx > 0.0) || !(cfg.T > 0.0))
        throw ConfigError("simulate: dx and T must be positive");
    const double maxd = *std::max_element(m.D.begin(), m.D.end());
    if (cfg.dt <= 0.0) cfg.dt = cfg.cfl_safety * cfg.dx * cfg.dx / maxd;
    if (cfg.dt > 0.4 * cfg.dx * cfg.dx / maxd * (1.0 + 1e-12))
        throw ConfigError("simulate: CFL violated, need dt <= 0.4*dx^2/max(D)");
    const double width = transition_width(m, front);
    if (cfg.x_right - cfg.x_left < 4.0 * width + m.c * cfg.T)
        throw ConfigError("simulate: window must cover 4x the transition width plus c*T");

    const int nodes = static_cast<int>(std::lround((cfg.x_right - cfg.x_left) / cfg.dx)) + 1;
    const long steps = static_cast<long>(std::ceil(cfg.T / cfg.dt - 1e-12));
    const int n = m.n;

    SimResult res;
    res.n = n;
    res.xs.resize(static_cast<size_t>(nodes));
    for (int j = 0; j < nodes; ++j) res.xs[static_cast<size_t>(j)] = cfg.x_left + cfg.dx * j;

    // History ring buffer: slices at t - q*dt for q = 0..depth-1.
    const int depth = (m.tau > 0.0) ? static_cast<int>(std::ceil(m.tau / cfg.dt)) + 1 : 1;
    const double lag_steps = m.tau / cfg.dt;
    const int lag_lo = (m.tau > 0.0) ? static_cast<int>(std::floor(lag_steps)) : 0;
    const double lag_w = (m.tau > 0.0) ? lag_steps - static_cast<double>(lag_lo) : 0.0;

    auto field = [&](std::vector<double>& buf, double time) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < nodes; ++j)
                buf[static_cast<size_t>(i) * nodes + j] =
                    front.eval(i, res.xs[static_cast<size_t>(j)] + m.c * time);
    };

    std::vector<std::vector<double>> ring(static_cast<size_t>(depth),
                                          std::vector<double>(static_cast<size_t>(n) * nodes));
    for (int q = 0; q < depth; ++q) field(ring[static_cast<size_t>(q)], -cfg.dt * q);
    int head = 0; // ring[head] is the current slice

    std::vector<double> next(static_cast<size_t>(n) * nodes);
    std::vector<double> u(static_cast<size_t>(n)), w(static_cast<size_t>(n)),
        f(static_cast<size_t>(n));

    const long snap_stride = std::max<long>(1, steps / std::max(1, cfg.snapshot_count - 1));
    const long pos_stride = std::max<long>(1, steps / std::max(1, cfg.position_samples));
    const double level = m.K[static_cast<size_t>(cfg.track_component)] / 2.0;
    std::vector<double> tracked(static_cast<size_t>(nodes));

    auto record = [&](long step, const std::vector<double>& state) {
        const double time = cfg.dt * step;
        if (step % snap_stride == 0 || step == steps) {
            res.snapshot_times.push_back(time);
            res.snapshots.push_back(state);
        }
        if (step % pos_stride == 0 || step == steps) {
            for (int j = 0; j < nodes; ++j)
                tracked[static_cast<size_t>(j)] =
                    state[static_cast<size_t>(cfg.track_component) * nodes + j];
            res.front_positions.emplace_back(time, crossing_position(tracked, res.xs, level));
        }
    };

    double box_lo = 0.0, box_hi = 0.0;
    for (int i = 0; i < n; ++i) box_hi = std::max(box_hi, m.K[static_cast<size_t>(i)]);
    box_lo = -0.1 * box_hi;
    box_hi *= 1.1;

    record(0, ring[static_cast<size_t>(head)]);
    const double inv_dx2 = 1.0 / (cfg.dx * cfg.dx);
    for (long step = 1; step <= steps; ++step) {
        const auto& cur = ring[static_cast<size_t>(head)];
        // slice at t - tau (between ring entries lag_lo and lag_lo+1 back)
        const auto& dl0 = ring[static_cast<size_t>((head + lag_lo) % depth)];
        const auto& dl1 = ring[static_cast<size_t>((head + std::min(lag_lo + 1, depth - 1)) % depth)];
        for (int j = 1; j + 1 < nodes; ++j) {
            for (int i = 0; i < n; ++i) {
                const size_t idx = static_cast<size_t>(i) * nodes + j;
                u[static_cast<size_t>(i)] = cur[idx];
                w[static_cast<size_t>(i)] =
                    (1.0 - lag_w) * dl0[idx] + lag_w * dl1[idx];
            }
            m.eval_reaction(u, w, f);
            for (int i = 0; i < n; ++i) {
                const size_t idx = static_cast<size_t>(i) * nodes + j;
                const double lap = (cur[idx - 1] - 2.0 * cur[idx] + cur[idx + 1]) * inv_dx2;
                next[idx] = cur[idx] + cfg.dt * (m.D[static_cast<size_t>(i)] * lap +
                                                 f[static_cast<size_t>(i)]);
            }
        }
        for (int i = 0; i < n; ++i) {
            next[static_cast<size_t>(i) * nodes] = front.tails.left_limit[static_cast<size_t>(i)];
            next[static_cast<size_t>(i) * nodes + nodes - 1] = m.K[static_cast<size_t>(i)];
        }
        head = (head - 1 + depth) % depth;
        ring[static_cast<size_t>(head)] = next;

        if (step % 64 == 0 || step == steps) {
            for (double v : next)
                if (!(v >= box_lo && v <= box_hi))
                    throw SimulationError("simulate: solution left [-0.1K, 1.1K], blow-up at t = " +
                                          std::to_string(cfg.dt * step));
        }
        record(step, ring[static_cast<size_t>(head)]);
    }

    const auto fit = front_speed(res);
    res.measured_speed = fit.speed;
    res.speed_r2 = fit.r2;
    return res;
}

SpeedFit front_speed(const SimResult& result) {
    const auto& pts = result.front_positions;
    if (pts.size() < 10) throw SimulationError("front_speed: need at least 10 front positions");
    const double n = static_cast<double>(pts.size());
    double st = 0, sx = 0, stt = 0, stx = 0, sxx = 0;
    for (const auto& [t, x] : pts) {
        st += t;
        sx += x;
        stt += t * t;
        stx += t * x;
        sxx += x * x;
    }
    const double denom = n * stt - st * st;
    if (denom == 0.0) throw SimulationError("front_speed: degenerate time samples");
    const double slope = (n * stx - st * sx) / denom;
    const double mean_x = sx / n;
    double ss_res = 0, ss_tot = 0;
    const double intercept = (sx - slope * st) / n;
    for (const auto& [t, x] : pts) {
        const double e = x - (intercept + slope * t);
        ss_res += e * e;
        ss_tot += (x - mean_x) * (x - mean_x);
    }
    SpeedFit fit;
    fit.speed = -slope; // phi(x + c t): crossing moves left at speed c
    fit.r2 = (ss_tot == 0.0) ? 1.0 : 1.0 - ss_res / ss_tot;
    return fit;
}

double profile_drift(const SimResult& result, const Profile& phi, double c) {
    if (result.snapshots.empty()) throw SimulationError("profile_drift: no snapshots");
    const int nodes = static_cast<int>(result.xs.size());
    double worst = 0.0;
    for (size_t s = 0; s < result.snapshots.size(); ++s) {
        const double t = result.snapshot_times[s];
        const auto& state = result.snapshots[s];
        for (int i = 0; i < result.n; ++i)
            for (int j = 0; j < nodes; ++j) {
                const double ref = phi.eval(i, result.xs[static_cast<size_t>(j)] + c * t);
                worst = std::max(worst,
                                 std::abs(state[static_cast<size_t>(i) * nodes + j] - ref));
            }
    }
    return worst;
}

} // namespace travwave
