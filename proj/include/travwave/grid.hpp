#pragma once

#include <span>
#include <vector>

#include "travwave/errors.hpp"

namespace travwave {

// Uniform sampling of a finite window of the real line.  When 0 lies inside
// the window it must coincide with a node so that knot-point exclusions in
// the finite-difference verifiers are well defined.
struct Grid {
    double left = 0.0;
    double h = 0.0;
    int count = 0;
    int zero_index = -1; // -1 when 0 is outside [left, right]

    double right() const { return left + h * static_cast<double>(count - 1); }
    double node(int k) const { return left + h * static_cast<double>(k); }
    bool has_zero() const { return zero_index >= 0; }
};

// General constructor: checks spacing consistency and the zero-node rule.
Grid make_grid(double left, double right, double h);

// Symmetric window [-L, L]; L must be an integer multiple of h.
Grid make_window(double L, double h);

// Exponential approach model for one component: beyond the window a sampled
// function is continued as limit + (edge_value - limit) * exp(-rate*dist).
struct ScalarTail {
    double left_limit = 0.0;
    double right_limit = 0.0;
    double rate_left = 1.0;
    double rate_right = 1.0;
};

// Vector-valued tail data; decay rates are shared across components
// (conservative: use the slowest rate).
struct TailSpec {
    std::vector<double> left_limit;
    std::vector<double> right_limit;
    double rate_left = 1.0;
    double rate_right = 1.0;

    ScalarTail component(int i) const {
        return ScalarTail{left_limit.at(static_cast<size_t>(i)),
                          right_limit.at(static_cast<size_t>(i)), rate_left, rate_right};
    }
};

TailSpec constant_tails(int n, double value, double rate = 1.0);

// Vector-valued sampled function on a Grid with analytic two-sided tails.
struct Profile {
    Grid grid;
    int n = 0;
    std::vector<double> values; // row-major, values[i*count + k]
    TailSpec tails;
    bool ordered = false; // set when the producer guarantees 0 <= values <= K

    double& at(int comp, int k) { return values[static_cast<size_t>(comp) * grid.count + k]; }
    double at(int comp, int k) const {
        return values[static_cast<size_t>(comp) * grid.count + k];
    }
    std::span<const double> component(int comp) const {
        return std::span<const double>(values).subspan(
            static_cast<size_t>(comp) * grid.count, static_cast<size_t>(grid.count));
    }
    std::span<double> component(int comp) {
        return std::span<double>(values).subspan(static_cast<size_t>(comp) * grid.count,
                                                 static_cast<size_t>(grid.count));
    }

    // Linear interpolation inside the window, tail model outside.
    double eval(int comp, double t) const;

    void require_finite(const char* what) const;
    // Largest excursion below 0 or above K (0 when inside the box).
    double box_violation(std::span<const double> K) const;
};

Profile make_profile(const Grid& grid, int n, TailSpec tails);

double sup_norm_diff(const Profile& a, const Profile& b);

} // namespace travwave
