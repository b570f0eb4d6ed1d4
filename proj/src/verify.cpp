#include "travwave/verify.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace travwave {

namespace {

VerificationReport check_inequality(const ModelSpec& m, const Profile& rho, int sign) {
    if (rho.n != m.n) throw ParameterError("verify: component count mismatch");
    const Grid& grid = rho.grid;
    if (!grid.has_zero()) throw ConfigError("verify: grid must contain the knot t=0 as a node");
    rho.require_finite("verify");

    const double h = grid.h;
    const int z = grid.zero_index;
    const double lag = m.c * m.tau;
    std::vector<double> u(static_cast<size_t>(m.n)), w(static_cast<size_t>(m.n)),
        f(static_cast<size_t>(m.n));

    VerificationReport rep;
    rep.max_violation = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < m.n; ++i) {
        const double sl = (rho.at(i, z) - rho.at(i, z - 1)) / h;
        const double sr = (rho.at(i, z + 1) - rho.at(i, z)) / h;
        rep.knot_slope_jump = std::max(rep.knot_slope_jump, std::abs(sr - sl));
    }
    for (int k = 1; k + 1 < grid.count; ++k) {
        if (std::abs(k - z) <= 1) continue;
        const double t = grid.node(k);
        for (int i = 0; i < m.n; ++i) {
            u[static_cast<size_t>(i)] = rho.at(i, k);
            w[static_cast<size_t>(i)] = (lag == 0.0) ? u[static_cast<size_t>(i)]
                                                     : rho.eval(i, t - lag);
        }
        m.eval_reaction(u, w, f);
        for (int i = 0; i < m.n; ++i) {
            const double upp = (rho.at(i, k - 1) - 2.0 * rho.at(i, k) + rho.at(i, k + 1)) / (h * h);
            const double up = (rho.at(i, k + 1) - rho.at(i, k - 1)) / (2.0 * h);
            const double lhs =
                m.D[static_cast<size_t>(i)] * upp - m.c * up + f[static_cast<size_t>(i)];
            const double deficit = sign * lhs; // sign=+1: require <= 0; -1: require >= 0
            if (deficit > rep.max_violation) {
                rep.max_violation = deficit;
                rep.worst_node = t;
            }
        }
        ++rep.checked_nodes;
    }
    return rep;
}

} // namespace

VerificationReport check_upper(const ModelSpec& m, const Profile& rho) {
    return check_inequality(m, rho, +1);
}

VerificationReport check_lower(const ModelSpec& m, const Profile& psi) {
    return check_inequality(m, psi, -1);
}

} // namespace travwave
