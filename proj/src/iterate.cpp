#include "travwave/iterate.hpp"

#include <cmath>
#include <limits>

namespace travwave {

namespace {

struct Worst {
    double amount = 0.0;
    double location = 0.0;
};

Worst max_excess(const Profile& a, const Profile& b) {
    // largest positive value of a - b and where it sits
    Worst w;
    w.amount = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < a.n; ++i)
        for (int k = 0; k < a.grid.count; ++k) {
            const double d = a.at(i, k) - b.at(i, k);
            if (d > w.amount) {
                w.amount = d;
                w.location = a.grid.node(k);
            }
        }
    return w;
}

Worst max_adjacent_decrease(const Profile& p) {
    Worst w;
    w.amount = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < p.n; ++i)
        for (int k = 0; k + 1 < p.grid.count; ++k) {
            const double d = p.at(i, k) - p.at(i, k + 1);
            if (d > w.amount) {
                w.amount = d;
                w.location = p.grid.node(k);
            }
        }
    return w;
}

double slope_ratio(const ModelSpec& m, const Profile& profile, const Profile& H) {
    const auto kernels = model_kernels(m);
    const double h = profile.grid.h;
    double worst = 0.0;
    for (int i = 0; i < m.n; ++i) {
        double max_slope = 0.0;
        for (int k = 0; k + 1 < profile.grid.count; ++k)
            max_slope = std::max(max_slope, std::abs(profile.at(i, k + 1) - profile.at(i, k)) / h);
        double sup_h = std::max(std::abs(H.tails.left_limit[static_cast<size_t>(i)]),
                                std::abs(H.tails.right_limit[static_cast<size_t>(i)]));
        for (int k = 0; k < H.grid.count; ++k) sup_h = std::max(sup_h, std::abs(H.at(i, k)));
        if (sup_h == 0.0) {
            if (max_slope > 1e-15) return std::numeric_limits<double>::infinity();
            continue;
        }
        const auto& ker = kernels[static_cast<size_t>(i)];
        const double bound = 2.0 * sup_h / (ker.d * (ker.lambda2 - ker.lambda1));
        worst = std::max(worst, max_slope / bound);
    }
    return worst;
}

} // namespace

IterationReport iterate(const ModelSpec& m, const Profile& upper, const Profile& lower,
                        const IterationOptions& opt) {
    if (upper.n != m.n || lower.n != m.n) throw ParameterError("iterate: component mismatch");
    if (upper.grid.count != lower.grid.count || upper.grid.left != lower.grid.left)
        throw ParameterError("iterate: upper and lower must share the grid");
    upper.require_finite("iterate upper");
    lower.require_finite("iterate lower");

    const double pre_tol = 1e-12;
    if (max_excess(lower, upper).amount > pre_tol)
        throw ParameterError("iterate: lower exceeds upper somewhere");
    double lower_max = 0.0;
    for (double v : lower.values) lower_max = std::max(lower_max, v);
    if (!(lower_max > 0.0))
        throw ParameterError("iterate: lower solution must be nonzero somewhere");
    if (max_adjacent_decrease(upper).amount > 1e-9)
        throw ParameterError("iterate: upper must be nondecreasing");
    if (upper.box_violation(m.K) > 1e-9)
        throw ParameterError("iterate: upper must lie in [0, K]");

    const auto kernels = model_kernels(m);
    IterationReport rep;
    Profile prev = upper;
    for (long step = 1; step <= opt.max_steps; ++step) {
        Profile H = evaluate_H(m, prev, opt.assert_ordering ? opt.ordering_tol : 1e6);
        Profile phi = apply_green_system(kernels, H);

        const Worst above = max_excess(phi, prev);
        const Worst below = max_excess(lower, phi);
        const double viol = std::max(0.0, std::max(above.amount, below.amount));
        if (opt.assert_ordering && viol > opt.ordering_tol) {
            const double loc = above.amount >= below.amount ? above.location : below.location;
            throw MonotonicityError("iterate: sandwich lower <= phi_n <= phi_{n-1} violated at step " +
                                        std::to_string(step) + ", t = " + std::to_string(loc) +
                                        ", by " + std::to_string(viol),
                                    step, loc, viol);
        }
        const Worst dec = max_adjacent_decrease(phi);
        if (opt.assert_ordering && dec.amount > opt.ordering_tol)
            throw MonotonicityError("iterate: iterate not nondecreasing in t at step " +
                                        std::to_string(step) + ", t = " +
                                        std::to_string(dec.location) + ", by " +
                                        std::to_string(dec.amount),
                                    step, dec.location, dec.amount);
        const double box = phi.box_violation(m.K);
        if (opt.assert_ordering && box > opt.ordering_tol)
            throw MonotonicityError("iterate: iterate leaves [0, K] at step " +
                                        std::to_string(step) + " by " + std::to_string(box),
                                    step, 0.0, box);
        phi.ordered = opt.assert_ordering;

        const double delta = sup_norm_diff(phi, prev);
        const double res = wave_residual(m, phi);
        rep.deltas.push_back(delta);
        rep.residuals.push_back(res);
        rep.ordering_violations.push_back(viol);
        rep.derivative_ratios.push_back(slope_ratio(m, phi, H));
        rep.steps = step;
        prev = std::move(phi);
        if (delta <= opt.epsilon) {
            rep.converged = res <= opt.residual_tol;
            rep.final_profile = std::move(prev);
            return rep;
        }
    }
    rep.final_profile = std::move(prev);
    const std::string msg = "iterate: no convergence within " + std::to_string(opt.max_steps) +
                            " steps (last delta " +
                            std::to_string(rep.deltas.empty() ? 0.0 : rep.deltas.back()) + ")";
    throw IterationBudgetError(msg, std::move(rep));
}

double derivative_bound(const ModelSpec& m, const Profile& profile) {
    Profile H = evaluate_H(m, profile, 1e-6);
    return slope_ratio(m, profile, H);
}

} // namespace travwave
