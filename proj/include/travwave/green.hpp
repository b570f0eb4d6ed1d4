#pragma once

#include <span>
#include <vector>

#include "travwave/grid.hpp"

namespace travwave {

// Characteristic data of the bounded-solution operator for
//   d*u'' - c*u' - beta*u + g = 0  on the whole line, beta > 0,
// whose real roots lambda1 < 0 < lambda2 solve d*l^2 - c*l - beta = 0.
struct GreenKernel {
    double d = 1.0;
    double c = 0.0;
    double beta = 1.0;
    double lambda1 = -1.0;
    double lambda2 = 1.0;
};

// Wave-form factory: all inputs strictly positive and finite.
GreenKernel make_kernel(double d, double c, double beta);

// Lemma-1 form u'' + alpha*u' + beta*u + f = 0 with beta < 0; maps onto the
// wave form with d = 1, c = -alpha, beta_wave = -beta.  alpha may be 0.
GreenKernel make_kernel_ode(double alpha, double beta);

// max_i |d*lambda_i^2 - c*lambda_i - beta|
double kernel_root_residual(const GreenKernel& k);

struct GreenOptions {
    // Reject grids with max(|lambda1|, lambda2)*h above this.
    double resolution_threshold = 0.5;
};

// Bounded solution of d*u'' - c*u' - beta*u + g = 0:
//   u(t) = (1/(d*(l2-l1))) * [ int_{-inf}^t e^{l1(t-s)} g ds
//                            + int_t^{+inf} e^{l2(t-s)} g ds ].
// g is reconstructed piecewise-cubically between nodes and integrated against
// the exponentials in closed form; beyond the window g follows the ScalarTail
// exponential-approach model, integrated analytically.
std::vector<double> apply_green(const GreenKernel& kernel, const Grid& grid,
                                std::span<const double> g, const ScalarTail& tail,
                                ScalarTail* out_tail = nullptr, const GreenOptions& opt = {});

// Componentwise application; result tails approach g_limit/beta_i per side.
Profile apply_green_system(const std::vector<GreenKernel>& kernels, const Profile& g,
                           const GreenOptions& opt = {});

// Max over interior nodes, excluding t=0 and its two neighbours, of
// |d*u'' - c*u' - beta*u + g| with second-order centered differences.
double ode_residual(const GreenKernel& kernel, const Grid& grid, std::span<const double> u,
                    std::span<const double> g);

// Half-width L such that exp(-min(|lambda1|, lambda2)*L) < eps.
double default_window(const GreenKernel& kernel, double eps = 1e-12);

// Example-1 demonstration: y(t) = e^{-t} (t>0), e^{t} (t<=0) solves
// y'' - y = 0 off t=0, is bounded and nonzero, but is not C^1 at 0 (the
// unique generalized solution for f=0 is 0).
struct CounterexampleReport {
    double max_offknot_residual = 0.0;
    double sup_norm = 0.0;
    double derivative_jump_at_zero = 0.0;
};
CounterexampleReport counterexample_nonuniqueness(const Grid& grid);

// Remark-2 instance of the variation-of-constants identity: with phi = 0 the
// left side vanishes while the right side is y(t) - e^{-t} + e^{t}.
struct IdentityDiscrepancyReport {
    double max_discrepancy = 0.0;
    double at_zero = 0.0;
};
IdentityDiscrepancyReport ma_identity_discrepancy(const Grid& grid);
// Control: a C^1 bounded solution (y = 0) with zero derivative jumps makes
// both sides agree.
IdentityDiscrepancyReport ma_identity_discrepancy_smooth(const Grid& grid);

} // namespace travwave
