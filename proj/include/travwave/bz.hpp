#pragma once

#include <array>

#include "travwave/predator_prey.hpp" // CertifiedFront
#include "travwave/verify.hpp"

namespace travwave {

// Belousov-Zhabotinskii system in wave coordinates (unit diffusion):
//   u'' - c u' + u [(1-r) - u + r v(t - c tau)] = 0
//   v'' - c v' + b u (1 - v)                    = 0
// connecting (0,0) to (1,1).
struct BZParams {
    double r = 0.5;
    double b = 0.5;
    double tau = 1.0;
};

void bz_validate(const BZParams& p);

// Characteristic rates of the upper candidate: lambda1 = (c+sqrt(c^2-4))/2,
// mu1 = (c+sqrt(c^2-4b))/2; b < 1 implies lambda1 < mu1.
std::array<double, 2> bz_upper_rates(const BZParams& p, double c);

// Admissible speeds need c >= 2 (real lambda1) and b < min(1, c).
double bz_admissible_speed(const BZParams& p);

// The analysis never displays beta for this system; the defaults come from
// the reaction's own-slope bounds on [0,K]: beta1 >= 1 + r, beta2 >= b.
std::array<double, 2> bz_beta(const BZParams& p, double margin = 0.0);

ModelSpec bz_model(const BZParams& p, double c, double margin = 0.0);

CertifiedFront bz_upper(const BZParams& p, double c, const Grid& grid, double tol = 1e-6);

// Mirror of the predator-prey lower: psi1 two-branch with rate nu1 = c and
// limit k <= (1-r)/2, psi2 = 0; requires r < 1.  Defaults k = (1-r)/4,
// alpha = 0.1 with halving retries.
CertifiedFront bz_lower(const BZParams& p, double c, const Grid& grid, double k = -1.0,
                        double alpha = -1.0, double tol = 1e-6);

} // namespace travwave
