#include "travwave/model.hpp"

#include <cmath>
#include <random>

namespace travwave {

ModelSpec make_model(std::string name, std::vector<double> D, double c, double tau,
                     std::vector<double> K, std::vector<double> beta, ReactionFn reaction,
                     QuasiMonotonePattern pattern) {
    const int n = static_cast<int>(D.size());
    if (n < 1) throw ParameterError("model: system size must be >= 1");
    if (static_cast<int>(K.size()) != n || static_cast<int>(beta.size()) != n)
        throw ParameterError("model: D, K, beta dimension mismatch");
    if (!(c > 0.0)) throw ParameterError("model: wave speed c must be > 0");
    if (!(tau >= 0.0)) throw ParameterError("model: delay tau must be >= 0");
    for (double d : D)
        if (!(d > 0.0)) throw ParameterError("model: diffusion coefficients must be > 0");
    for (double k : K)
        if (!(k > 0.0)) throw ParameterError("model: equilibrium K must be positive");
    for (double b : beta)
        if (!(b >= 0.0)) throw ParameterError("model: beta must be nonnegative");
    if (!reaction) throw ParameterError("model: reaction evaluator required");

    std::vector<double> zero(static_cast<size_t>(n), 0.0), out(static_cast<size_t>(n));
    reaction(zero, zero, out);
    for (double v : out)
        if (std::abs(v) > 1e-12) throw ParameterError("model: reaction(0,0) must vanish");
    reaction(K, K, out);
    for (double v : out)
        if (std::abs(v) > 1e-12) throw ParameterError("model: reaction(K,K) must vanish");

    ModelSpec m;
    m.name = std::move(name);
    m.n = n;
    m.D = std::move(D);
    m.c = c;
    m.tau = tau;
    m.K = std::move(K);
    m.beta = std::move(beta);
    m.reaction = std::move(reaction);
    m.qm_pattern = pattern.vary_current.empty() ? QuasiMonotonePattern::all_vary(n)
                                                : std::move(pattern);
    return m;
}

std::vector<GreenKernel> model_kernels(const ModelSpec& m) {
    std::vector<GreenKernel> ks;
    ks.reserve(static_cast<size_t>(m.n));
    for (int i = 0; i < m.n; ++i) {
        if (!(m.beta[static_cast<size_t>(i)] > 0.0))
            throw ParameterError("model: kernel construction needs beta > 0 componentwise");
        ks.push_back(make_kernel(m.D[static_cast<size_t>(i)], m.c, m.beta[static_cast<size_t>(i)]));
    }
    return ks;
}

Profile evaluate_H(const ModelSpec& m, const Profile& phi, double box_tol) {
    if (phi.n != m.n) throw ParameterError("evaluate_H: component count mismatch");
    phi.require_finite("evaluate_H");
    const double excursion = phi.box_violation(m.K);
    if (excursion > box_tol)
        throw OrderingError("evaluate_H: profile leaves [0, K] by " + std::to_string(excursion));

    TailSpec tails;
    tails.left_limit.assign(static_cast<size_t>(m.n), 0.0);
    tails.right_limit.resize(static_cast<size_t>(m.n));
    for (int i = 0; i < m.n; ++i)
        tails.right_limit[static_cast<size_t>(i)] =
            m.beta[static_cast<size_t>(i)] * m.K[static_cast<size_t>(i)];
    tails.rate_left = phi.tails.rate_left;
    tails.rate_right = phi.tails.rate_right;

    Profile out = make_profile(phi.grid, m.n, std::move(tails));
    const double lag = m.c * m.tau;
    std::vector<double> u(static_cast<size_t>(m.n)), w(static_cast<size_t>(m.n)),
        f(static_cast<size_t>(m.n));
    for (int k = 0; k < phi.grid.count; ++k) {
        const double t = phi.grid.node(k);
        for (int i = 0; i < m.n; ++i) {
            u[static_cast<size_t>(i)] = phi.at(i, k);
            w[static_cast<size_t>(i)] = (lag == 0.0) ? u[static_cast<size_t>(i)]
                                                     : phi.eval(i, t - lag);
        }
        m.eval_reaction(u, w, f);
        for (int i = 0; i < m.n; ++i)
            out.at(i, k) = f[static_cast<size_t>(i)] +
                           m.beta[static_cast<size_t>(i)] * u[static_cast<size_t>(i)];
    }
    return out;
}

double check_quasi_monotone(const ModelSpec& m, long trials, unsigned long long seed) {
    if (trials < 1) throw ParameterError("check_quasi_monotone: trials must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int n = m.n;
    std::vector<double> lo_u(static_cast<size_t>(n)), hi_u(static_cast<size_t>(n)),
        lo_w(static_cast<size_t>(n)), hi_w(static_cast<size_t>(n)),
        f_lo(static_cast<size_t>(n)), f_hi(static_cast<size_t>(n));

    auto draw_pair = [&](double K, bool vary, double& lo, double& hi) {
        double x = unit(rng) * K;
        // Snap to the box corners occasionally: the tight cases sit there.
        const double snap = unit(rng);
        if (snap < 0.1) x = 0.0;
        else if (snap < 0.2) x = K;
        if (!vary) {
            lo = hi = x;
            return;
        }
        double y = x + unit(rng) * (K - x);
        if (unit(rng) < 0.1) y = K;
        if (unit(rng) < 0.05) y = x;
        lo = x;
        hi = y;
    };

    double worst = 0.0;
    for (long t = 0; t < trials; ++t) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const bool vc = (j == i) || m.qm_pattern.vary_current[static_cast<size_t>(i)]
                                                                     [static_cast<size_t>(j)];
                const bool vd = (j == i) || m.qm_pattern.vary_delayed[static_cast<size_t>(i)]
                                                                     [static_cast<size_t>(j)];
                draw_pair(m.K[static_cast<size_t>(j)], vc, lo_u[static_cast<size_t>(j)],
                          hi_u[static_cast<size_t>(j)]);
                draw_pair(m.K[static_cast<size_t>(j)], vd, lo_w[static_cast<size_t>(j)],
                          hi_w[static_cast<size_t>(j)]);
            }
            m.eval_reaction(lo_u, lo_w, f_lo);
            m.eval_reaction(hi_u, hi_w, f_hi);
            const double expr = f_hi[static_cast<size_t>(i)] - f_lo[static_cast<size_t>(i)] +
                                m.beta[static_cast<size_t>(i)] *
                                    (hi_u[static_cast<size_t>(i)] - lo_u[static_cast<size_t>(i)]);
            worst = std::min(worst, expr);
        }
    }
    return worst;
}

double wave_residual(const ModelSpec& m, const Profile& phi) {
    if (phi.n != m.n) throw ParameterError("wave_residual: component count mismatch");
    const Grid& grid = phi.grid;
    const double h = grid.h;
    const double lag = m.c * m.tau;
    const int z = grid.zero_index;
    std::vector<double> u(static_cast<size_t>(m.n)), w(static_cast<size_t>(m.n)),
        f(static_cast<size_t>(m.n));
    double worst = 0.0;
    for (int k = 1; k + 1 < grid.count; ++k) {
        if (z >= 0 && std::abs(k - z) <= 1) continue;
        const double t = grid.node(k);
        for (int i = 0; i < m.n; ++i) {
            u[static_cast<size_t>(i)] = phi.at(i, k);
            w[static_cast<size_t>(i)] = (lag == 0.0) ? u[static_cast<size_t>(i)]
                                                     : phi.eval(i, t - lag);
        }
        m.eval_reaction(u, w, f);
        for (int i = 0; i < m.n; ++i) {
            const double upp = (phi.at(i, k - 1) - 2.0 * phi.at(i, k) + phi.at(i, k + 1)) / (h * h);
            const double up = (phi.at(i, k + 1) - phi.at(i, k - 1)) / (2.0 * h);
            const double r =
                m.D[static_cast<size_t>(i)] * upp - m.c * up + f[static_cast<size_t>(i)];
            worst = std::max(worst, std::abs(r));
        }
    }
    return worst;
}

} // namespace travwave
