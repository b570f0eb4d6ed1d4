#include "travwave/fronts.hpp"

#include <algorithm>
#include <cmath>

namespace travwave {

double FrontComponent::value(double t) const {
    if (t <= 0.0) return amp_left * std::exp(rate_left * t);
    return limit - amp_right * std::exp(-rate_right * t);
}

double FrontComponent::deriv(double t) const {
    if (t <= 0.0) return rate_left * amp_left * std::exp(rate_left * t);
    return rate_right * amp_right * std::exp(-rate_right * t);
}

double FrontComponent::second_deriv(double t, int side) const {
    if (t < 0.0 || (t == 0.0 && side <= 0))
        return rate_left * rate_left * amp_left * std::exp(rate_left * t);
    return -rate_right * rate_right * amp_right * std::exp(-rate_right * t);
}

FrontComponent symmetric_front(double rate, double limit) {
    if (!(rate > 0.0)) throw ParameterError("front: rate must be > 0");
    if (!(limit > 0.0)) throw ParameterError("front: limit must be > 0");
    return FrontComponent{rate, 0.5 * limit, rate, 0.5 * limit, limit};
}

FrontComponent two_branch_front(double rate_left, double amp_left, double rate_right,
                                double amp_right, double limit) {
    if (!(rate_left > 0.0) || !(rate_right > 0.0))
        throw ParameterError("front: rates must be > 0");
    return FrontComponent{rate_left, amp_left, rate_right, amp_right, limit};
}

void require_c1_at_knot(const FrontComponent& f, double tol) {
    if (std::abs(f.value_jump_at_knot()) > tol)
        throw ParameterError("front: value mismatch at the knot");
    if (std::abs(f.deriv_jump_at_knot()) > tol)
        throw ParameterError("front: derivative mismatch at the knot");
}

Profile sample_fronts(std::span<const FrontComponent> fronts, const Grid& grid) {
    const int n = static_cast<int>(fronts.size());
    TailSpec tails;
    tails.left_limit.assign(static_cast<size_t>(n), 0.0);
    tails.right_limit.resize(static_cast<size_t>(n));
    tails.rate_left = fronts[0].rate_left;
    tails.rate_right = fronts[0].rate_right;
    for (int i = 0; i < n; ++i) {
        tails.right_limit[static_cast<size_t>(i)] = fronts[static_cast<size_t>(i)].limit;
        tails.rate_left = std::min(tails.rate_left, fronts[static_cast<size_t>(i)].rate_left);
        tails.rate_right = std::min(tails.rate_right, fronts[static_cast<size_t>(i)].rate_right);
    }
    Profile p = make_profile(grid, n, std::move(tails));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < grid.count; ++k)
            p.at(i, k) = fronts[static_cast<size_t>(i)].value(grid.node(k));
    return p;
}

} // namespace travwave
