#pragma once

#include <array>

#include "travwave/fronts.hpp"
#include "travwave/iterate.hpp"
#include "travwave/verify.hpp"

namespace travwave {

// Diffusive predator-prey system with delayed conversion, in wave coordinates:
//   d1 u'' - c u' + r u [(1 - u/P) - a v]        = 0
//   d2 v'' - c v' + v [-nu + b u(t - c tau)]     = 0
// connecting (0,0) to the positive steady state (nu/b, (1-nu/(Pb))/a).
struct PredatorPreyParams {
    double d1 = 1.0, d2 = 3.0;
    double r = 1.0, P = 1.0, a = 1.0, b = 1.0, nu = 0.5;
    double tau = 1.0;
};

void pp_validate(const PredatorPreyParams& p);

inline double pp_p(const PredatorPreyParams& p) { return p.nu / p.b; }
inline double pp_q(const PredatorPreyParams& p) { return (1.0 - p.nu / (p.P * p.b)) / p.a; }

struct CstarResult {
    double value = 0.0;
    bool corollary_branch = false; // nu/b < P < 1/2 gives c* = 0
};
CstarResult pp_cstar(const PredatorPreyParams& p);

// Shift vector beta: the displayed bound max(-r + r*nu/(Pb) + nu/b, 0) is
// taken together with the own-derivative bound r*nu/(Pb) (the displayed value
// alone fails the certification the spec requires); zero components are
// bumped to 0.1 so every kernel keeps a sign-split root pair.
std::array<double, 2> pp_beta(const PredatorPreyParams& p, double margin = 0.0);

ModelSpec pp_model(const PredatorPreyParams& p, double c, double margin = 0.0);

// Front rates of the closed-form upper candidate as displayed:
// lambda1 = (c + sqrt(c^2 - 4 d1 r)) / (2 d1), lambda2 = c / (2 d2).
std::array<double, 2> pp_upper_rates(const PredatorPreyParams& p, double c);

struct CertifiedFront {
    std::array<FrontComponent, 2> fronts;
    Profile profile;
    VerificationReport report;
    double alpha_used = 0.0;            // lower candidates only
    std::array<double, 2> rates{0, 0};  // rates the certified candidate uses
    int ladder_rung = 0;                // 0 = the displayed rate pair
};

// Half-amplitude fronts with limits (nu/b, q); checks C^1 matching at the
// knot analytically, then certifies numerically via check_upper.  The
// displayed rate pair (lambda1+, c/(2 d2)) is tried first; when it fails the
// differential inequality (it does for d2 above c/(2 lambda1+), where the
// slow phi2 decay leaves a positive predation-deficit term), the other roots
// of the same displayed quadratics d1 l^2 - c l + r = 0 and d2 l^2 - c l = 0
// are tried, with the verifier as arbiter.  Throws ParameterError for
// c^2 < 4 d1 r and CertificationError when no candidate certifies at `tol`.
CertifiedFront pp_upper(const PredatorPreyParams& p, double c, const Grid& grid,
                        double tol = 1e-6);

// Paper-style lower candidate: psi1 = alpha k e^{nu1 t} (t<=0),
// k - alpha k e^{-nu1 t} (t>0) with nu1 = c/d1; psi2 = 0.  Certified via
// check_lower with automatic alpha-halving retries (up to 10); also verifies
// psi1 <= phi1 of the upper candidate.  Pass k <= 0 / alpha <= 0 for the
// defaults k = nu/(4b), alpha = min(0.1, P/(2k), (4Pb/nu)/10).
CertifiedFront pp_lower(const PredatorPreyParams& p, double c, const Grid& grid,
                        double k = -1.0, double alpha = -1.0, double tol = 1e-6);

} // namespace travwave
