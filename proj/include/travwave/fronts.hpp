#pragma once

#include <span>
#include <vector>

#include "travwave/grid.hpp"

namespace travwave {

// Two-branch closed-form front component with knot at t = 0:
//   value(t) = amp_left * e^{rate_left * t},            t <= 0
//   value(t) = limit - amp_right * e^{-rate_right * t}, t >  0
// The symmetric half-amplitude construction (amp = limit/2, equal rates) is
// continuous with matching first derivatives; the raw constructor also admits
// broken candidates for negative controls and the small-alpha lower
// candidates, whose knot irregularity is reported rather than hidden.
struct FrontComponent {
    double rate_left = 1.0;
    double amp_left = 0.5;
    double rate_right = 1.0;
    double amp_right = 0.5;
    double limit = 1.0;

    double value(double t) const;
    double deriv(double t) const;
    // One-sided at the knot: side < 0 gives the t->0- branch.
    double second_deriv(double t, int side = 0) const;

    double value_jump_at_knot() const { return (limit - amp_right) - amp_left; }
    double deriv_jump_at_knot() const { return amp_right * rate_right - amp_left * rate_left; }
};

// C^1 front: amplitude limit/2 on both branches, equal rates.
FrontComponent symmetric_front(double rate, double limit);

// Unvalidated two-branch candidate (knot irregularity allowed).
FrontComponent two_branch_front(double rate_left, double amp_left, double rate_right,
                                double amp_right, double limit);

// Requires |value jump| and |derivative jump| below tol at the knot.
void require_c1_at_knot(const FrontComponent& f, double tol = 1e-12);

// Samples the components on the grid; tails take each side's slowest rate,
// left limits 0, right limits the component limits.
Profile sample_fronts(std::span<const FrontComponent> fronts, const Grid& grid);

} // namespace travwave
