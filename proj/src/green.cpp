#include "travwave/green.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace travwave {

namespace {

void check_kernel_inputs(double d, double c, double beta) {
    if (!std::isfinite(d) || !std::isfinite(c) || !std::isfinite(beta))
        throw ParameterError("kernel: non-finite parameter");
    if (!(d > 0.0)) throw ParameterError("kernel: d must be > 0");
    if (!(beta > 0.0)) throw ParameterError("kernel: beta must be > 0");
}

GreenKernel roots_from(double d, double c, double beta) {
    GreenKernel k;
    k.d = d;
    k.c = c;
    k.beta = beta;
    const double disc = std::sqrt(c * c + 4.0 * beta * d);
    // Rationalized form of (c - disc)/(2d): avoids cancellation for small beta.
    k.lambda1 = -2.0 * beta / (c + disc);
    k.lambda2 = (c + disc) / (2.0 * d);
    return k;
}

// M_j(z) = int_0^1 x^j e^{z x} dx, evaluated by series; |z| <= 0.5 always
// holds under the resolution threshold.
std::array<double, 4> exp_moments(double z) {
    std::array<double, 4> m{};
    for (int j = 0; j < 4; ++j) {
        double term = 1.0; // z^p / p!
        double sum = 1.0 / static_cast<double>(j + 1);
        for (int p = 1; p < 24; ++p) {
            term *= z / static_cast<double>(p);
            sum += term / static_cast<double>(j + p + 1);
            if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        }
        m[static_cast<size_t>(j)] = sum;
    }
    return m;
}

// Cubic coefficients a0..a3 of the interpolant of g on cell [t_k, t_{k+1}] in
// the local coordinate x = (s - t_k)/h in [0, 1].  Interior cells use the
// centered 4-point stencil; the first/last cells use one-sided stencils.
// Grids with fewer than 4 nodes fall back to the linear reconstruction.
void cell_coeffs(std::span<const double> g, int k, std::array<double, 4>& a) {
    const int n = static_cast<int>(g.size());
    auto G = [&](int i) { return g[static_cast<size_t>(i)]; };
    if (n < 4) {
        a = {G(k), G(k + 1) - G(k), 0.0, 0.0};
        return;
    }
    if (k == 0) {
        a[0] = G(0);
        a[1] = -11.0 / 6.0 * G(0) + 3.0 * G(1) - 1.5 * G(2) + G(3) / 3.0;
        a[2] = G(0) - 2.5 * G(1) + 2.0 * G(2) - 0.5 * G(3);
        a[3] = (-G(0) + 3.0 * G(1) - 3.0 * G(2) + G(3)) / 6.0;
    } else if (k == n - 2) {
        const int m = n - 1;
        a[0] = G(m - 1);
        a[1] = G(m - 3) / 6.0 - G(m - 2) + 0.5 * G(m - 1) + G(m) / 3.0;
        a[2] = 0.5 * G(m - 2) - G(m - 1) + 0.5 * G(m);
        a[3] = (-G(m - 3) + 3.0 * G(m - 2) - 3.0 * G(m - 1) + G(m)) / 6.0;
    } else {
        a[0] = G(k);
        a[1] = -G(k - 1) / 3.0 - 0.5 * G(k) + G(k + 1) - G(k + 2) / 6.0;
        a[2] = 0.5 * G(k - 1) - G(k) + 0.5 * G(k + 1);
        a[3] = (-G(k - 1) + 3.0 * G(k) - 3.0 * G(k + 1) + G(k + 2)) / 6.0;
    }
}

} // namespace

GreenKernel make_kernel(double d, double c, double beta) {
    check_kernel_inputs(d, c, beta);
    if (!(c > 0.0)) throw ParameterError("kernel: wave form requires c > 0");
    return roots_from(d, c, beta);
}

GreenKernel make_kernel_ode(double alpha, double beta) {
    if (!std::isfinite(alpha) || !std::isfinite(beta))
        throw ParameterError("kernel: non-finite parameter");
    if (!(beta < 0.0))
        throw ParameterError("kernel: ode form requires beta < 0 for real roots of opposite sign");
    return roots_from(1.0, -alpha, -beta);
}

double kernel_root_residual(const GreenKernel& k) {
    const double r1 = k.d * k.lambda1 * k.lambda1 - k.c * k.lambda1 - k.beta;
    const double r2 = k.d * k.lambda2 * k.lambda2 - k.c * k.lambda2 - k.beta;
    return std::max(std::abs(r1), std::abs(r2));
}

std::vector<double> apply_green(const GreenKernel& kernel, const Grid& grid,
                                std::span<const double> g, const ScalarTail& tail,
                                ScalarTail* out_tail, const GreenOptions& opt) {
    const int n = grid.count;
    if (static_cast<int>(g.size()) != n) throw ParameterError("apply_green: size mismatch");
    for (double x : g)
        if (!std::isfinite(x)) throw ParameterError("apply_green: non-finite sample");
    if (!(tail.rate_left > 0.0) || !(tail.rate_right > 0.0))
        throw ParameterError("apply_green: tail rates must be > 0");

    const double l1 = kernel.lambda1;
    const double l2 = kernel.lambda2;
    const double h = grid.h;
    if (std::max(-l1, l2) * h > opt.resolution_threshold)
        throw ResolutionError("apply_green: grid too coarse for kernel (|lambda|*h above threshold)");

    // Per-kernel constants. Cell integrals in local coordinates:
    //   forward:  int_cell e^{l1(t_{k+1}-s)} g ds = h e^{l1 h} S(-l1 h)
    //   backward: int_cell e^{l2(t_k   -s)} g ds = h           S(-l2 h)
    // with S(z) = sum_j a_j M_j(z) for the cell's cubic coefficients a_j.
    const auto mf = exp_moments(-l1 * h);
    const auto mb = exp_moments(-l2 * h);
    const double ef = std::exp(l1 * h);  // < 1
    const double eb = std::exp(-l2 * h); // < 1

    const double gl = tail.left_limit;
    const double gr = tail.right_limit;

    std::vector<double> fwd(static_cast<size_t>(n));
    // Analytic tail of int_{-inf}^{t_0}: constant part + exponential approach.
    fwd[0] = gl / (-l1) + (g.front() - gl) / (tail.rate_left - l1);
    std::array<double, 4> a{};
    for (int k = 0; k + 1 < n; ++k) {
        cell_coeffs(g, k, a);
        const double cell = h * ef * (a[0] * mf[0] + a[1] * mf[1] + a[2] * mf[2] + a[3] * mf[3]);
        fwd[static_cast<size_t>(k) + 1] = ef * fwd[static_cast<size_t>(k)] + cell;
    }

    std::vector<double> bwd(static_cast<size_t>(n));
    bwd[static_cast<size_t>(n) - 1] = gr / l2 + (g.back() - gr) / (l2 + tail.rate_right);
    for (int k = n - 2; k >= 0; --k) {
        cell_coeffs(g, k, a);
        const double cell = h * (a[0] * mb[0] + a[1] * mb[1] + a[2] * mb[2] + a[3] * mb[3]);
        bwd[static_cast<size_t>(k)] = eb * bwd[static_cast<size_t>(k) + 1] + cell;
    }

    const double pref = 1.0 / (kernel.d * (l2 - l1));
    std::vector<double> u(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k)
        u[static_cast<size_t>(k)] =
            pref * (fwd[static_cast<size_t>(k)] + bwd[static_cast<size_t>(k)]);

    if (out_tail) {
        out_tail->left_limit = gl / kernel.beta;
        out_tail->right_limit = gr / kernel.beta;
        out_tail->rate_left = std::min(l2, tail.rate_left);
        out_tail->rate_right = std::min(-l1, tail.rate_right);
    }
    return u;
}

Profile apply_green_system(const std::vector<GreenKernel>& kernels, const Profile& g,
                           const GreenOptions& opt) {
    if (static_cast<int>(kernels.size()) != g.n)
        throw ParameterError("apply_green_system: kernel/component count mismatch");
    TailSpec tails;
    tails.left_limit.resize(static_cast<size_t>(g.n));
    tails.right_limit.resize(static_cast<size_t>(g.n));
    tails.rate_left = g.tails.rate_left;
    tails.rate_right = g.tails.rate_right;
    Profile out = make_profile(g.grid, g.n, g.tails);
    double rate_l = std::numeric_limits<double>::infinity();
    double rate_r = rate_l;
    for (int i = 0; i < g.n; ++i) {
        ScalarTail ot;
        auto u = apply_green(kernels[static_cast<size_t>(i)], g.grid, g.component(i),
                             g.tails.component(i), &ot, opt);
        std::copy(u.begin(), u.end(), out.component(i).begin());
        tails.left_limit[static_cast<size_t>(i)] = ot.left_limit;
        tails.right_limit[static_cast<size_t>(i)] = ot.right_limit;
        rate_l = std::min(rate_l, ot.rate_left);
        rate_r = std::min(rate_r, ot.rate_right);
    }
    tails.rate_left = rate_l;
    tails.rate_right = rate_r;
    out.tails = std::move(tails);
    return out;
}

double ode_residual(const GreenKernel& kernel, const Grid& grid, std::span<const double> u,
                    std::span<const double> g) {
    const int n = grid.count;
    if (static_cast<int>(u.size()) != n || static_cast<int>(g.size()) != n)
        throw ParameterError("ode_residual: size mismatch");
    const double h = grid.h;
    const int z = grid.zero_index;
    double worst = 0.0;
    for (int k = 1; k + 1 < n; ++k) {
        if (z >= 0 && std::abs(k - z) <= 1) continue;
        const double upp =
            (u[static_cast<size_t>(k) - 1] - 2.0 * u[static_cast<size_t>(k)] +
             u[static_cast<size_t>(k) + 1]) /
            (h * h);
        const double up = (u[static_cast<size_t>(k) + 1] - u[static_cast<size_t>(k) - 1]) / (2.0 * h);
        const double r = kernel.d * upp - kernel.c * up - kernel.beta * u[static_cast<size_t>(k)] +
                         g[static_cast<size_t>(k)];
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

double default_window(const GreenKernel& kernel, double eps) {
    const double rate = std::min(-kernel.lambda1, kernel.lambda2);
    return -std::log(eps) / rate;
}

CounterexampleReport counterexample_nonuniqueness(const Grid& grid) {
    if (!grid.has_zero()) throw ConfigError("counterexample: grid must contain t=0 as a node");
    const int n = grid.count;
    std::vector<double> y(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double t = grid.node(k);
        y[static_cast<size_t>(k)] = (t > 0.0) ? std::exp(-t) : std::exp(t);
    }
    CounterexampleReport rep;
    // y'' - y = 0 off the knot; Lemma-1 form with alpha = 0, beta = -1.
    const GreenKernel k = make_kernel_ode(0.0, -1.0);
    std::vector<double> zero(static_cast<size_t>(n), 0.0);
    rep.max_offknot_residual = ode_residual(k, grid, y, zero);
    rep.sup_norm = *std::max_element(y.begin(), y.end());
    // One-sided derivatives from the closed form: y'(0+) = -1, y'(0-) = +1.
    rep.derivative_jump_at_zero = -std::exp(-0.0) - std::exp(0.0);
    return rep;
}

namespace {

// Remark-2 right-hand side for a single knot at 0 with derivative jump J:
//   rhs(t) = y(t) + (J/2) (e^{-t} - e^{t});
// the instance's left-hand side is 0 because phi = 0.
IdentityDiscrepancyReport identity_instance(const Grid& grid, bool smooth_control) {
    if (!grid.has_zero()) throw ConfigError("identity: grid must contain t=0 as a node");
    IdentityDiscrepancyReport rep;
    const double J = smooth_control ? 0.0 : -2.0;
    for (int k = 0; k < grid.count; ++k) {
        const double t = grid.node(k);
        const double y =
            smooth_control ? 0.0 : ((t > 0.0) ? std::exp(-t) : std::exp(t));
        const double rhs = y + 0.5 * J * (std::exp(-t) - std::exp(t));
        const double disc = std::abs(rhs);
        rep.max_discrepancy = std::max(rep.max_discrepancy, disc);
        if (k == grid.zero_index) rep.at_zero = disc;
    }
    return rep;
}

} // namespace

IdentityDiscrepancyReport ma_identity_discrepancy(const Grid& grid) {
    return identity_instance(grid, false);
}

IdentityDiscrepancyReport ma_identity_discrepancy_smooth(const Grid& grid) {
    return identity_instance(grid, true);
}

} // namespace travwave
