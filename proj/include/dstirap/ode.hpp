// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "dstirap/core.hpp"

namespace dstirap {

/// Uniform time grid over [t_begin, t_end] with n_steps integration steps.
struct TimeGrid {
    double t_begin = 0.0;
    double t_end = 1.0;
    int n_steps = 1;

    double step() const { return (t_end - t_begin) / n_steps; }
    double time_at(int i) const {
        return t_begin + (t_end - t_begin) * (static_cast<double>(i) / n_steps);
    }
    void validate() const {
        if (!(t_end > t_begin))
            throw std::invalid_argument("TimeGrid: t_end must exceed t_begin");
        if (n_steps < 1) throw std::invalid_argument("TimeGrid: n_steps < 1");
    }
};

namespace detail {

template <class State>
bool all_finite(const State& y) {
    return y.allFinite();
}

} // namespace detail

/// Classical fixed-step RK4. `deriv(t, y, dydt)` fills the derivative;
/// `observe(step_index, t, y)` is called at every grid point including the
/// initial one. Returns the final state.
template <class State, class Deriv, class Observer>
State rk4_evolve(Deriv&& deriv, State y, const TimeGrid& grid, Observer&& observe) {
    grid.validate();
    const double h = grid.step();
    State k1 = y, k2 = y, k3 = y, k4 = y, tmp = y;
    observe(0, grid.t_begin, static_cast<const State&>(y));
    for (int i = 0; i < grid.n_steps; ++i) {
        const double t = grid.time_at(i);
        deriv(t, static_cast<const State&>(y), k1);
        tmp = y + (h / 2.0) * k1;
        deriv(t + h / 2.0, static_cast<const State&>(tmp), k2);
        tmp = y + (h / 2.0) * k2;
        deriv(t + h / 2.0, static_cast<const State&>(tmp), k3);
        tmp = y + h * k3;
        deriv(t + h, static_cast<const State&>(tmp), k4);
        y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!detail::all_finite(y))
            throw integration_error("rk4: non-finite state", grid.time_at(i + 1));
        observe(i + 1, grid.time_at(i + 1), static_cast<const State&>(y));
    }
    return y;
}

/// Full trajectory at every grid point (n_steps + 1 states).
template <class State, class Deriv>
std::vector<State> integrate_ode(Deriv&& deriv, const State& y0, const TimeGrid& grid) {
    std::vector<State> out;
    out.reserve(static_cast<std::size_t>(grid.n_steps) + 1);
    rk4_evolve(deriv, y0, grid, [&](int, double, const State& y) { out.push_back(y); });
    return out;
}

/// Reruns the integration at half the step and reports the largest
/// entrywise deviation over up to ~1000 shared sample points.
template <class State, class Deriv>
double rk4_convergence_check(Deriv&& deriv, const State& y0, const TimeGrid& grid) {
    grid.validate();
    const int stride = std::max(1, grid.n_steps / 1000);
    std::vector<State> samples;
    rk4_evolve(deriv, y0, grid, [&](int i, double, const State& y) {
        if (i % stride == 0 || i == grid.n_steps) samples.push_back(y);
    });
    TimeGrid fine{grid.t_begin, grid.t_end, 2 * grid.n_steps};
    double dev = 0.0;
    std::size_t cursor = 0;
    rk4_evolve(deriv, y0, fine, [&](int i, double, const State& y) {
        if (i % 2 != 0) return;
        const int ci = i / 2;
        if (ci % stride == 0 || ci == grid.n_steps) {
            dev = std::max(dev, (y - samples[cursor]).cwiseAbs().maxCoeff());
            ++cursor;
        }
    });
    return dev;
}

} // namespace dstirap
