#include "travwave/predator_prey.hpp"

#include <cmath>

namespace travwave {

void pp_validate(const PredatorPreyParams& p) {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw ParameterError(std::string("predator_prey: ") + name + " must be > 0");
    };
    positive(p.d1, "d1");
    positive(p.d2, "d2");
    positive(p.r, "r");
    positive(p.P, "P");
    positive(p.a, "a");
    positive(p.b, "b");
    positive(p.nu, "nu");
    if (!(p.tau >= 0.0)) throw ParameterError("predator_prey: tau must be >= 0");
    if (!(p.P > p.nu / p.b))
        throw ParameterError("predator_prey: P > nu/b required for the positive steady state");
}

CstarResult pp_cstar(const PredatorPreyParams& p) {
    pp_validate(p);
    CstarResult res;
    if (p.nu / p.b < p.P && p.P < 0.5) {
        res.value = 0.0;
        res.corollary_branch = true;
        return res;
    }
    const double q = pp_q(p);
    res.value = std::max(0.5 * std::sqrt((1.0 / p.P + 2.0 * p.a * q) * p.r),
                         std::sqrt(4.0 * p.d1 * p.r));
    return res;
}

std::array<double, 2> pp_beta(const PredatorPreyParams& p, double margin) {
    const double displayed = std::max(-p.r + p.r * p.nu / (p.P * p.b) + p.nu / p.b, 0.0);
    // sup over [0,K] of -(d f1 / d u1) = r*nu/(P*b); the displayed bound can
    // sit below it and then fails certification.
    const double own_derivative = p.r * p.nu / (p.P * p.b);
    double b1 = std::max(displayed, own_derivative) + margin;
    double b2 = p.nu + margin;
    if (b1 == 0.0) b1 = 0.1;
    if (b2 == 0.0) b2 = 0.1;
    return {b1, b2};
}

ModelSpec pp_model(const PredatorPreyParams& p, double c, double margin) {
    pp_validate(p);
    if (!(c > 0.0)) throw ParameterError("predator_prey: wave speed c must be > 0");
    const auto beta = pp_beta(p, margin);
    const double K1 = pp_p(p);
    const double K2 = pp_q(p);
    const PredatorPreyParams pp = p;
    ReactionFn f = [pp](std::span<const double> u, std::span<const double> w,
                        std::span<double> out) {
        out[0] = pp.r * u[0] * ((1.0 - u[0] / pp.P) - pp.a * u[1]);
        out[1] = u[1] * (-pp.nu + pp.b * w[0]);
    };
    // f1 is strictly decreasing in the current u2 slot, so the inequality is
    // the displayed one with that slot held common between the ordered pair.
    QuasiMonotonePattern pattern = QuasiMonotonePattern::all_vary(2);
    pattern.vary_current[0][1] = false;
    return make_model("predator_prey", {p.d1, p.d2}, c, p.tau, {K1, K2},
                      {beta[0], beta[1]}, std::move(f), std::move(pattern));
}

std::array<double, 2> pp_upper_rates(const PredatorPreyParams& p, double c) {
    const double disc = c * c - 4.0 * p.d1 * p.r;
    if (disc < 0.0)
        throw ParameterError("predator_prey: c^2 >= 4 d1 r required for a real front rate");
    const double lambda1 = (c + std::sqrt(disc)) / (2.0 * p.d1);
    const double lambda2 = c / (2.0 * p.d2);
    return {lambda1, lambda2};
}

CertifiedFront pp_upper(const PredatorPreyParams& p, double c, const Grid& grid, double tol) {
    const auto model = pp_model(p, c);
    const double disc = c * c - 4.0 * p.d1 * p.r;
    if (disc < 0.0)
        throw ParameterError("predator_prey: c^2 >= 4 d1 r required for a real front rate");
    const double sq = std::sqrt(disc);
    const double fast = (c + sq) / (2.0 * p.d1);
    const double slow = 2.0 * p.r / (c + sq); // rationalized (c - sq)/(2 d1)
    const double half = c / (2.0 * p.d2);     // displayed
    const double root = c / p.d2;             // nonzero root of d2 l^2 - c l = 0
    const std::array<std::array<double, 2>, 4> ladder = {
        std::array<double, 2>{fast, half}, // the displayed pair
        std::array<double, 2>{slow, root},
        std::array<double, 2>{slow, half},
        std::array<double, 2>{fast, root},
    };

    CertifiedFront out;
    for (size_t rung = 0; rung < ladder.size(); ++rung) {
        const auto& rates = ladder[rung];
        out.fronts = {symmetric_front(rates[0], pp_p(p)), symmetric_front(rates[1], pp_q(p))};
        for (const auto& f : out.fronts) require_c1_at_knot(f);
        out.profile = sample_fronts(out.fronts, grid);
        out.profile.ordered = true;
        out.report = check_upper(model, out.profile);
        out.rates = rates;
        out.ladder_rung = static_cast<int>(rung);
        if (out.report.passed(tol)) return out;
    }
    throw CertificationError("predator_prey: no upper candidate certified (last violation " +
                                 std::to_string(out.report.max_violation) + " at t = " +
                                 std::to_string(out.report.worst_node) + ")",
                             out.report.max_violation, out.report.worst_node);
}

CertifiedFront pp_lower(const PredatorPreyParams& p, double c, const Grid& grid, double k,
                        double alpha, double tol) {
    const auto model = pp_model(p, c);
    const double nu1 = c / p.d1;
    if (k <= 0.0) k = p.nu / (4.0 * p.b);
    if (!(k <= p.nu / (4.0 * p.b)) || !(k < p.P))
        throw ParameterError("predator_prey: lower needs 0 < k <= nu/(4b) and k < P");
    if (alpha <= 0.0)
        alpha = std::min({0.1, p.P / (2.0 * k), 4.0 * p.P * p.b / p.nu / 10.0});

    const auto upper = pp_upper(p, c, grid, tol);
    // Ordering under the upper's left branch needs a faster decay and a
    // smaller amplitude at the knot.
    if (nu1 < upper.rates[0])
        throw ParameterError("predator_prey: lower rate nu1 below the upper front rate");

    CertifiedFront out;
    std::string last_msg = "no attempt";
    for (int attempt = 0; attempt < 10; ++attempt) {
        if (alpha * k > 0.5 * pp_p(p)) {
            alpha *= 0.5;
            continue;
        }
        out.fronts = {two_branch_front(nu1, alpha * k, nu1, alpha * k, k),
                      two_branch_front(nu1, 0.0, nu1, 0.0, 0.0)};
        out.profile = sample_fronts(out.fronts, grid);
        out.profile.ordered = true;
        out.alpha_used = alpha;
        out.rates = {nu1, nu1};
        out.report = check_lower(model, out.profile);
        if (out.report.passed(tol)) {
            for (int i = 0; i < 2; ++i)
                for (int kk = 0; kk < grid.count; ++kk)
                    if (out.profile.at(i, kk) > upper.profile.at(i, kk) + 1e-12)
                        throw CertificationError(
                            "predator_prey: lower candidate exceeds the upper at t = " +
                                std::to_string(grid.node(kk)),
                            out.profile.at(i, kk) - upper.profile.at(i, kk), grid.node(kk));
            return out;
        }
        last_msg = "violation " + std::to_string(out.report.max_violation) + " at t = " +
                   std::to_string(out.report.worst_node);
        alpha *= 0.5;
    }
    throw CertificationError("predator_prey: lower candidate failed certification after retries (" +
                                 last_msg + ")",
                             out.report.max_violation, out.report.worst_node);
}

} // namespace travwave
