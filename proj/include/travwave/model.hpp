#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "travwave/green.hpp"
#include "travwave/grid.hpp"

namespace travwave {

// Reaction evaluator specialized to point delays: out = f(u(t), u(t - c*tau)).
using ReactionFn =
    std::function<void(std::span<const double> u, std::span<const double> u_delay,
                       std::span<double> out)>;

// Which input slots may differ between the ordered pair in the component-wise
// quasi-monotonicity check.  Own current/delayed slots always vary; a cross
// slot is frozen when the component's reaction is decreasing in it (the
// inequality is then checked with that slot held common, which is the form
// whose beta bounds the predator-prey analysis displays).
struct QuasiMonotonePattern {
    std::vector<std::vector<bool>> vary_current; // [component][slot]
    std::vector<std::vector<bool>> vary_delayed;

    static QuasiMonotonePattern all_vary(int n) {
        QuasiMonotonePattern p;
        p.vary_current.assign(static_cast<size_t>(n),
                              std::vector<bool>(static_cast<size_t>(n), true));
        p.vary_delayed = p.vary_current;
        return p;
    }
};

// One delayed reaction-diffusion system in wave coordinates.
struct ModelSpec {
    std::string name;
    int n = 0;
    std::vector<double> D;    // diffusion diagonal
    double c = 0.0;           // wave speed
    double tau = 0.0;         // delay
    std::vector<double> K;    // positive equilibrium
    std::vector<double> beta; // diagonal of the shift matrix
    ReactionFn reaction;
    QuasiMonotonePattern qm_pattern;

    void eval_reaction(std::span<const double> u, std::span<const double> w,
                       std::span<double> out) const {
        reaction(u, w, out);
    }
};

// Validates equilibria f(0,0) = f(K,K) = 0 (to 1e-12), positivity of D, K,
// nonnegativity of beta, c > 0, tau >= 0.
ModelSpec make_model(std::string name, std::vector<double> D, double c, double tau,
                     std::vector<double> K, std::vector<double> beta, ReactionFn reaction,
                     QuasiMonotonePattern pattern = {});

// Componentwise wave-form kernels; every beta_i must be strictly positive.
std::vector<GreenKernel> model_kernels(const ModelSpec& m);

// H(phi)(t) = f_c(phi_t) + beta*phi(t); the delayed value phi(t - c*tau) is
// read by linear interpolation inside the window and the tail model outside.
// Result tails: 0 on the left, beta*K on the right.
Profile evaluate_H(const ModelSpec& m, const Profile& phi, double box_tol = 1e-9);

// Empirical certification of the componentwise quasi-monotonicity condition:
// samples `trials` random ordered pairs 0 <= psi <= phi <= K of (current,
// delayed) state vectors per component (cross slots frozen per pattern) and
// returns the most negative value of
//   f_i(phi) - f_i(psi) + beta_i * (phi_i(0) - psi_i(0))
// found; >= -1e-9 certifies the condition for the model's beta.
double check_quasi_monotone(const ModelSpec& m, long trials, unsigned long long seed);

// max over interior off-knot nodes of |D phi'' - c phi' + f_c(phi_t)| with
// second-order centered differences.
double wave_residual(const ModelSpec& m, const Profile& phi);

} // namespace travwave
