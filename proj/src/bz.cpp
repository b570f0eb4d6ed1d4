#include "travwave/bz.hpp"

#include <cmath>

namespace travwave {

void bz_validate(const BZParams& p) {
    if (!(p.r > 0.0) || !std::isfinite(p.r)) throw ParameterError("bz: r must be > 0");
    if (!(p.b > 0.0) || !std::isfinite(p.b)) throw ParameterError("bz: b must be > 0");
    if (!(p.tau >= 0.0)) throw ParameterError("bz: tau must be >= 0");
}

std::array<double, 2> bz_upper_rates(const BZParams& p, double c) {
    if (c * c < 4.0) throw ParameterError("bz: c >= 2 required for a real front rate lambda1");
    if (c * c < 4.0 * p.b) throw ParameterError("bz: c^2 >= 4b required for a real rate mu1");
    const double lambda1 = (c + std::sqrt(c * c - 4.0)) / 2.0;
    const double mu1 = (c + std::sqrt(c * c - 4.0 * p.b)) / 2.0;
    return {lambda1, mu1};
}

double bz_admissible_speed(const BZParams& p) {
    bz_validate(p);
    return std::max(2.0, p.b);
}

std::array<double, 2> bz_beta(const BZParams& p, double margin) {
    double b1 = std::max(p.r + 1.0, 1.0) + margin;
    double b2 = p.b + margin;
    if (b1 == 0.0) b1 = 0.1;
    if (b2 == 0.0) b2 = 0.1;
    return {b1, b2};
}

ModelSpec bz_model(const BZParams& p, double c, double margin) {
    bz_validate(p);
    if (!(c > 0.0)) throw ParameterError("bz: wave speed c must be > 0");
    const auto beta = bz_beta(p, margin);
    const BZParams bp = p;
    ReactionFn f = [bp](std::span<const double> u, std::span<const double> w,
                        std::span<double> out) {
        out[0] = u[0] * ((1.0 - bp.r) - u[0] + bp.r * w[1]);
        out[1] = bp.b * u[0] * (1.0 - u[1]);
    };
    // Both cross dependences are nondecreasing on [0, K]; the full ordered
    // pattern applies.
    return make_model("belousov_zhabotinskii", {1.0, 1.0}, c, p.tau, {1.0, 1.0},
                      {beta[0], beta[1]}, std::move(f));
}

CertifiedFront bz_upper(const BZParams& p, double c, const Grid& grid, double tol) {
    bz_validate(p);
    if (!(p.b < 1.0))
        throw ParameterError("bz: upper-solution route requires b < 1");
    if (!(p.b < std::min(1.0, c)))
        throw ParameterError("bz: upper-solution route requires b < min(1, c)");
    const auto model = bz_model(p, c);
    // Roots of the displayed characteristic equations l^2 - c l + 1 = 0 and
    // m^2 - c m + b = 0.  The displayed fast pair is tried first; for t < 0
    // its second inequality picks up a positive (b/2)(e^{l1 t} - e^{m1 t})
    // term, which the slow-root combinations avoid.
    const double sq1 = std::sqrt(c * c - 4.0);
    const double sq2 = std::sqrt(c * c - 4.0 * p.b);
    const double l_fast = (c + sq1) / 2.0;
    const double l_slow = 2.0 / (c + sq1);
    const double m_fast = (c + sq2) / 2.0;
    const double m_slow = 2.0 * p.b / (c + sq2);
    const std::array<std::array<double, 2>, 4> ladder = {
        std::array<double, 2>{l_fast, m_fast}, // the displayed pair
        std::array<double, 2>{l_slow, m_slow},
        std::array<double, 2>{l_fast, m_slow},
        std::array<double, 2>{l_slow, m_fast},
    };
    CertifiedFront out;
    for (size_t rung = 0; rung < ladder.size(); ++rung) {
        const auto& rates = ladder[rung];
        out.fronts = {symmetric_front(rates[0], 1.0), symmetric_front(rates[1], 1.0)};
        for (const auto& f : out.fronts) require_c1_at_knot(f);
        out.profile = sample_fronts(out.fronts, grid);
        out.profile.ordered = true;
        out.report = check_upper(model, out.profile);
        out.rates = rates;
        out.ladder_rung = static_cast<int>(rung);
        if (out.report.passed(tol)) return out;
    }
    throw CertificationError("bz: no upper candidate certified (last violation " +
                                 std::to_string(out.report.max_violation) + " at t = " +
                                 std::to_string(out.report.worst_node) + ")",
                             out.report.max_violation, out.report.worst_node);
}

CertifiedFront bz_lower(const BZParams& p, double c, const Grid& grid, double k, double alpha,
                        double tol) {
    if (!(p.r < 1.0))
        throw ParameterError("bz: lower construction requires r < 1 (unsupported regime)");
    const auto model = bz_model(p, c);
    const double nu1 = c; // root of nu^2 - c nu = 0 with unit diffusion
    if (k <= 0.0) k = (1.0 - p.r) / 4.0;
    if (!(k <= (1.0 - p.r) / 2.0))
        throw ParameterError("bz: lower needs 0 < k <= (1-r)/2");
    if (alpha <= 0.0) alpha = 0.1;

    const auto upper = bz_upper(p, c, grid, tol);
    if (nu1 < upper.rates[0])
        throw ParameterError("bz: lower rate nu1 below the upper front rate");

    CertifiedFront out;
    std::string last_msg = "no attempt";
    for (int attempt = 0; attempt < 10; ++attempt) {
        if (alpha * k > 0.25) {
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
                        throw CertificationError("bz: lower candidate exceeds the upper at t = " +
                                                     std::to_string(grid.node(kk)),
                                                 out.profile.at(i, kk) - upper.profile.at(i, kk),
                                                 grid.node(kk));
            return out;
        }
        last_msg = "violation " + std::to_string(out.report.max_violation) + " at t = " +
                   std::to_string(out.report.worst_node);
        alpha *= 0.5;
    }
    throw CertificationError("bz: lower candidate failed certification after retries (" + last_msg +
                                 ")",
                             out.report.max_violation, out.report.worst_node);
}

} // namespace travwave
