// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace dstirap {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double pi = 3.14159265358979323846;

/// Thrown when time evolution produces non-finite values or drifts beyond
/// its tolerance. Carries the time at which the problem was detected.
class integration_error : public std::runtime_error {
public:
    integration_error(const std::string& what, double t)
        : std::runtime_error(what + " at t = " + std::to_string(t)), t_(t) {}

    double time() const noexcept { return t_; }

private:
    double t_;
};

} // namespace dstirap
