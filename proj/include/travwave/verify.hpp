#pragma once

#include "travwave/model.hpp"

namespace travwave {

// Certification outcome for a quasi-upper or quasi-lower candidate.
// max_violation is the worst deficit of the required sign: for an upper
// candidate the largest positive value of D rho'' - c rho' + f_c(rho_t), for
// a lower candidate the largest positive value of its negation.  Values <= 0
// mean the inequality held with margin everywhere checked.
struct VerificationReport {
    double max_violation = 0.0;
    double worst_node = 0.0;
    long checked_nodes = 0;
    double knot_slope_jump = 0.0; // diagnostic: discrete slope jump across t=0

    bool passed(double tol = 1e-6) const { return max_violation <= tol; }
};

// Evaluates the wave-equation differential inequality by centered differences
// at all interior nodes except t = 0 and its immediate neighbours.  The
// candidate is expected to be C^1-representable off the knot; the discrete
// slope jump at the knot is reported for diagnostics.
VerificationReport check_upper(const ModelSpec& m, const Profile& rho);
VerificationReport check_lower(const ModelSpec& m, const Profile& psi);

} // namespace travwave
