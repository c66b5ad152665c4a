// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "dstirap/core.hpp"

namespace dstirap {

/// Scalar knobs of the drive design. Frequencies are in units of the peak
/// Rabi frequency omega0, times in 1/omega0.
struct PulseParams {
    double omega0 = 1.0;
    double t_f = 40.0;
    double t0 = 3.0;  ///< pulse delay, default 3 t_f / 40
    double tau = 4.0; ///< pulse width, default 0.1 t_f
    double theta_f = pi / 2.0;
    /// Regularizer centering: sech((t - t_f/2)/tau) when true, the
    /// uncentered sech(t/tau) variant when false.
    bool centered_regularizer = true;

    static PulseParams make(double t_f, double theta_f, double omega0 = 1.0) {
        PulseParams p;
        p.omega0 = omega0;
        p.t_f = t_f;
        p.t0 = 3.0 * t_f / 40.0;
        p.tau = 0.1 * t_f;
        p.theta_f = theta_f;
        p.validate();
        return p;
    }

    void validate() const {
        if (!(omega0 > 0.0)) throw std::invalid_argument("PulseParams: omega0 must be positive");
        if (!(t_f > 0.0)) throw std::invalid_argument("PulseParams: t_f must be positive");
        if (!(tau > 0.0)) throw std::invalid_argument("PulseParams: tau must be positive");
        if (!(theta_f > 0.0 && theta_f <= pi / 2.0))
            throw std::invalid_argument("PulseParams: theta_f outside (0, pi/2]");
        if (!(t0 < t_f / 2.0)) throw std::invalid_argument("PulseParams: t0 must be below t_f/2");
    }
};

struct PulsePair {
    double omega1;
    double omega2;
};

namespace detail {

// Closed-form pulse family, valid for all t (the public operations guard
// the [0, t_f] window; derivative stencils and deviation sweeps need the
// smooth continuation outside it).
struct GaussEval {
    double w1, w2;   // pulse values
    double dw1, dw2; // time derivatives
};

inline GaussEval gauss_eval(const PulseParams& p, double t) {
    const double x1 = (t - p.t_f / 2.0 - p.t0) / p.tau;
    const double x2 = (t - p.t_f / 2.0 + p.t0 / 2.0) / p.tau;
    const double e1 = p.omega0 * std::exp(-x1 * x1);
    const double e2 = p.omega0 * std::exp(-x2 * x2);
    const double s = std::sin(p.theta_f), c = std::cos(p.theta_f);
    GaussEval g;
    // Sign convention: omega1 = -Omega sin(theta), so the first line of the
    // Gaussian family carries a minus sign relative to its magnitude.
    g.w1 = -s * e1;
    g.w2 = c * e1 + e2;
    g.dw1 = -s * e1 * (-2.0 * x1 / p.tau);
    g.dw2 = c * e1 * (-2.0 * x1 / p.tau) + e2 * (-2.0 * x2 / p.tau);
    return g;
}

inline double theta_at(const PulseParams& p, double t) {
    const GaussEval g = gauss_eval(p, t);
    return std::atan2(std::abs(g.w1), std::abs(g.w2));
}

inline double omega_at(const PulseParams& p, double t) {
    const GaussEval g = gauss_eval(p, t);
    return std::hypot(g.w1, g.w2);
}

inline double theta_dot_at(const PulseParams& p, double t) {
    const GaussEval g = gauss_eval(p, t);
    return (g.w1 * g.dw2 - g.dw1 * g.w2) / (g.w1 * g.w1 + g.w2 * g.w2);
}

inline double regularizer_at(const PulseParams& p, double t) {
    const double x = p.centered_regularizer ? (t - p.t_f / 2.0) / p.tau : t / p.tau;
    return 1.0 / std::cosh(x);
}

inline double mu_at(const PulseParams& p, double t) {
    return -std::atan(theta_dot_at(p, t) / (regularizer_at(p, t) / p.tau + omega_at(p, t)));
}

// 4th-order central difference, used for the mu derivative.
template <class F>
double fd4(F&& f, double t, double h) {
    return (-f(t + 2.0 * h) + 8.0 * f(t + h) - 8.0 * f(t - h) + f(t - 2.0 * h)) / (12.0 * h);
}

inline double mu_dot_at(const PulseParams& p, double t) {
    const double h = p.t_f * 1e-5;
    return fd4([&p](double s) { return mu_at(p, s); }, t, h);
}

inline void check_window(const PulseParams& p, double t) {
    if (t < 0.0 || t > p.t_f)
        throw std::invalid_argument("pulse evaluation outside [0, t_f]");
}

} // namespace detail

/// Original Gaussian pulse pair (omega1 <= 0 under the adopted sign
/// convention; omega2 >= 0).
inline PulsePair gaussian_pulses(const PulseParams& p, double t) {
    detail::check_window(p, t);
    const auto g = detail::gauss_eval(p, t);
    return {g.w1, g.w2};
}

/// Mixing angle on [0, pi/2], branch fixed by pulse magnitudes.
inline double mixing_angle(double omega1, double omega2) {
    if (omega1 == 0.0 && omega2 == 0.0)
        throw std::invalid_argument("mixing_angle: undefined for zero pulses");
    return std::atan2(std::abs(omega1), std::abs(omega2));
}

inline double pulse_amplitude(double omega1, double omega2) {
    return std::hypot(omega1, omega2);
}

/// Closed-form mixing-angle rate from pulse values and derivatives.
inline double theta_dot(double omega1, double omega2, double domega1, double domega2) {
    const double n2 = omega1 * omega1 + omega2 * omega2;
    if (n2 == 0.0) throw std::invalid_argument("theta_dot: zero pulse amplitude");
    return (omega1 * domega2 - domega1 * omega2) / n2;
}

inline double theta_dot(const PulseParams& p, double t) {
    detail::check_window(p, t);
    const auto g = detail::gauss_eval(p, t);
    return theta_dot(g.w1, g.w2, g.dw1, g.dw2);
}

/// Regularizer G(t) = sech((t - t_f/2)/tau), or sech(t/tau) in the
/// uncentered variant.
inline double regularizer(const PulseParams& p, double t) {
    detail::check_window(p, t);
    return detail::regularizer_at(p, t);
}

/// Euler angle mu(t) = -arctan(theta_dot / (G/tau + Omega)).
inline double euler_angle_mu(const PulseParams& p, double t) {
    detail::check_window(p, t);
    return detail::mu_at(p, t);
}

inline double euler_angle_mu_dot(const PulseParams& p, double t) {
    detail::check_window(p, t);
    return detail::mu_dot_at(p, t);
}

struct ControlParams {
    double g_x;
    double g_z;
};

/// Control pair of the correction Hamiltonian: g_x = mu_dot (finite
/// difference), g_z through the singularity-free identity g_z = G(t)/tau.
inline ControlParams control_params(const PulseParams& p, double t) {
    detail::check_window(p, t);
    return {detail::mu_dot_at(p, t), detail::regularizer_at(p, t) / p.tau};
}

/// Modified pulse pair from mixing angle, amplitude and controls.
inline PulsePair modified_pulses(double theta, double omega, double g_x, double g_z) {
    const double s = std::sin(theta), c = std::cos(theta);
    return {g_x * c - (g_z + omega) * s, g_x * s + (g_z + omega) * c};
}

inline PulsePair modified_pulses(const PulseParams& p, double t) {
    detail::check_window(p, t);
    const auto g = detail::gauss_eval(p, t);
    const double theta = std::atan2(std::abs(g.w1), std::abs(g.w2));
    const double omega = std::hypot(g.w1, g.w2);
    const auto ctrl = ControlParams{detail::mu_dot_at(p, t),
                                    detail::regularizer_at(p, t) / p.tau};
    return modified_pulses(theta, omega, ctrl.g_x, ctrl.g_z);
}

/// Physical drives of the two atoms: Omega_A = -sqrt(2) omega1,
/// Omega_B = sqrt(2) omega2 (same map for the modified pair).
struct DrivePair {
    double omega_a;
    double omega_b;
};

inline DrivePair physical_drives(const PulsePair& pp) {
    const double r = std::sqrt(2.0);
    return {-r * pp.omega1, r * pp.omega2};
}

/// Sampled drive-design table on a uniform grid over [0, t_f]. Immutable
/// after construction and safe to share across threads.
struct ControlFields {
    std::vector<double> t;
    std::vector<double> omega1, omega2, omega;
    std::vector<double> theta, theta_dot;
    std::vector<double> regularizer;
    std::vector<double> mu, mu_dot;
    std::vector<double> g_x, g_z;
    std::vector<double> omega1_prime, omega2_prime;

    std::size_t size() const { return t.size(); }

    static ControlFields compute(const PulseParams& p, int n_samples) {
        if (n_samples < 2) throw std::invalid_argument("ControlFields: need >= 2 samples");
        ControlFields f;
        f.t.reserve(n_samples);
        for (int i = 0; i < n_samples; ++i) {
            const double t = p.t_f * (static_cast<double>(i) / (n_samples - 1));
            const auto g = detail::gauss_eval(p, t);
            const double theta = std::atan2(std::abs(g.w1), std::abs(g.w2));
            const double omega = std::hypot(g.w1, g.w2);
            const double thdot = dstirap::theta_dot(g.w1, g.w2, g.dw1, g.dw2);
            const double G = detail::regularizer_at(p, t);
            const double mu = detail::mu_at(p, t);
            const double mudot = detail::mu_dot_at(p, t);
            const double gx = mudot, gz = G / p.tau;
            const auto mod = modified_pulses(theta, omega, gx, gz);
            f.t.push_back(t);
            f.omega1.push_back(g.w1);
            f.omega2.push_back(g.w2);
            f.omega.push_back(omega);
            f.theta.push_back(theta);
            f.theta_dot.push_back(thdot);
            f.regularizer.push_back(G);
            f.mu.push_back(mu);
            f.mu_dot.push_back(mudot);
            f.g_x.push_back(gx);
            f.g_z.push_back(gz);
            f.omega1_prime.push_back(mod.omega1);
            f.omega2_prime.push_back(mod.omega2);
        }
        return f;
    }
};

} // namespace dstirap
