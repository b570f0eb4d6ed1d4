#pragma once

#include "travwave/model.hpp"

namespace travwave {

struct IterationOptions {
    double epsilon = 1e-8;        // sup-norm stopping threshold
    long max_steps = 1000;
    double ordering_tol = 1e-8;   // sandwich / monotone-in-t / box tolerance
    double residual_tol = 1e-4;   // wave-equation residual required at convergence
    // Diagnostic mode: record ordering violations instead of aborting (the
    // contract behaviour is to abort; turning this off is for studying what
    // the plain fixed-point iteration does when the hypotheses fail).
    bool assert_ordering = true;
};

// Convergence trace of the monotone scheme phi_n = G(H(phi_{n-1})).
struct IterationReport {
    long steps = 0;
    std::vector<double> deltas;              // sup-norm |phi_n - phi_{n-1}|
    std::vector<double> residuals;           // wave-equation residual per step
    std::vector<double> ordering_violations; // max positive violation of the sandwich
    std::vector<double> derivative_ratios;   // measured slope / theoretical bound
    bool converged = false;
    Profile final_profile;
};

// Budget exhaustion carries the partial trace.
class IterationBudgetError : public ConvergenceError {
public:
    IterationReport report;
    IterationBudgetError(const std::string& msg, IterationReport rep)
        : ConvergenceError(msg), report(std::move(rep)) {}
};

// Runs phi_0 = upper, phi_n = G(H(phi_{n-1})) and asserts after every step
//   lower - tol <= phi_n <= phi_{n-1} + tol,
//   phi_n nondecreasing in t within tol,
//   phi_n in [0, K] within tol.
// Violations abort with MonotonicityError (the non-C^1 failure mode made
// visible); exhausting max_steps throws ConvergenceError.
//
// Preconditions (checked): lower <= upper pointwise, lower nonzero somewhere,
// upper nondecreasing and inside [0, K].  Quasi-upper/lower certification is
// the caller's job (see check_upper / check_lower).
IterationReport iterate(const ModelSpec& m, const Profile& upper, const Profile& lower,
                        const IterationOptions& opt = {});

// Ratio of the measured maximum finite-difference slope of the profile to the
// bound 2*sup|H_i| / (d_i (lambda2_i - lambda1_i)); <= 1 (up to discretization
// slack) for anything produced by the bounded-solution operator.
double derivative_bound(const ModelSpec& m, const Profile& profile);

} // namespace travwave
