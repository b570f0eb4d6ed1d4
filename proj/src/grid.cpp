#include "travwave/grid.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace travwave {

namespace {

void check_spacing(double left, double right, double h, int count) {
    if (!(h > 0.0) || !std::isfinite(h)) throw ParameterError("grid: h must be finite and > 0");
    if (count < 3) throw ParameterError("grid: count must be >= 3");
    if (!std::isfinite(left) || !std::isfinite(right))
        throw ParameterError("grid: window bounds must be finite");
    const double span = right - left;
    const double expect = h * static_cast<double>(count - 1);
    const double tol = 64.0 * std::numeric_limits<double>::epsilon() *
                       std::max({1.0, std::abs(left), std::abs(right)});
    if (std::abs(span - expect) > tol)
        throw ParameterError("grid: right - left must equal (count-1)*h");
}

int locate_zero(double left, double right, double h) {
    if (left > 0.0 || right < 0.0) return -1;
    const double k = -left / h;
    const int k0 = static_cast<int>(std::lround(k));
    const double tol = 64.0 * std::numeric_limits<double>::epsilon() *
                       std::max(1.0, std::abs(left) / h);
    if (std::abs(k - static_cast<double>(k0)) > tol)
        throw ParameterError("grid: t=0 lies inside the window but is not a node");
    return k0;
}

} // namespace

Grid make_grid(double left, double right, double h) {
    if (!(right > left)) throw ParameterError("grid: right must exceed left");
    const int count = static_cast<int>(std::lround((right - left) / h)) + 1;
    check_spacing(left, right, h, count);
    Grid g;
    g.left = left;
    g.h = h;
    g.count = count;
    g.zero_index = locate_zero(left, g.node(count - 1), h);
    return g;
}

Grid make_window(double L, double h) {
    if (!(L > 0.0)) throw ParameterError("grid: window half-width L must be > 0");
    if (!(h > 0.0)) throw ParameterError("grid: h must be > 0");
    const double k = L / h;
    const int half = static_cast<int>(std::lround(k));
    if (std::abs(k - static_cast<double>(half)) > 1e-9 * std::max(1.0, k) || half < 1)
        throw ParameterError("grid: L must be a positive integer multiple of h");
    Grid g;
    g.h = h;
    g.count = 2 * half + 1;
    g.left = -h * static_cast<double>(half);
    g.zero_index = half;
    return g;
}

TailSpec constant_tails(int n, double value, double rate) {
    TailSpec t;
    t.left_limit.assign(static_cast<size_t>(n), value);
    t.right_limit.assign(static_cast<size_t>(n), value);
    t.rate_left = rate;
    t.rate_right = rate;
    return t;
}

Profile make_profile(const Grid& grid, int n, TailSpec tails) {
    if (n < 1) throw ParameterError("profile: component count must be >= 1");
    if (static_cast<int>(tails.left_limit.size()) != n ||
        static_cast<int>(tails.right_limit.size()) != n)
        throw ParameterError("profile: tail limit dimension mismatch");
    if (!(tails.rate_left > 0.0) || !(tails.rate_right > 0.0))
        throw ParameterError("profile: tail decay rates must be > 0");
    Profile p;
    p.grid = grid;
    p.n = n;
    p.values.assign(static_cast<size_t>(n) * grid.count, 0.0);
    p.tails = std::move(tails);
    return p;
}

double Profile::eval(int comp, double t) const {
    const double a = grid.left;
    const double b = grid.right();
    const auto v = component(comp);
    if (t <= a) {
        const double lim = tails.left_limit[static_cast<size_t>(comp)];
        return lim + (v.front() - lim) * std::exp(tails.rate_left * (t - a));
    }
    if (t >= b) {
        const double lim = tails.right_limit[static_cast<size_t>(comp)];
        return lim + (v.back() - lim) * std::exp(-tails.rate_right * (t - b));
    }
    const double x = (t - a) / grid.h;
    int k = static_cast<int>(x);
    if (k >= grid.count - 1) k = grid.count - 2;
    const double w = x - static_cast<double>(k);
    return v[static_cast<size_t>(k)] * (1.0 - w) + v[static_cast<size_t>(k) + 1] * w;
}

void Profile::require_finite(const char* what) const {
    for (double x : values)
        if (!std::isfinite(x)) throw ParameterError(std::string(what) + ": non-finite sample");
}

double Profile::box_violation(std::span<const double> K) const {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        const auto v = component(i);
        const double ki = K[static_cast<size_t>(i)];
        for (double x : v) {
            if (-x > worst) worst = -x;
            if (x - ki > worst) worst = x - ki;
        }
    }
    return worst;
}

double sup_norm_diff(const Profile& a, const Profile& b) {
    if (a.n != b.n || a.values.size() != b.values.size())
        throw ParameterError("sup_norm_diff: shape mismatch");
    double worst = 0.0;
    for (size_t i = 0; i < a.values.size(); ++i)
        worst = std::max(worst, std::abs(a.values[i] - b.values[i]));
    return worst;
}

} // namespace travwave
