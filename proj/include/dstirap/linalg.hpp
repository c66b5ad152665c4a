// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>

#include "dstirap/core.hpp"

namespace dstirap {

/// Max-norm Hermiticity check, relative to the largest entry magnitude.
inline bool is_hermitian(const Matrix& m, double tol = 1e-12) {
    if (m.rows() != m.cols()) return false;
    if (m.size() == 0) return true;
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

/// Kronecker product, row-major nesting: the left factor varies slowest.
inline Matrix tensor_product(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r)
        for (Eigen::Index c = 0; c < a.cols(); ++c)
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    return out;
}

/// exp(i * scale * m) for Hermitian m, via eigendecomposition.
inline Matrix hermitian_expm(const Matrix& m, double scale) {
    if (!is_hermitian(m))
        throw std::invalid_argument("hermitian_expm: input is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> es(m);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("hermitian_expm: eigendecomposition failed");
    const auto phases =
        (Complex(0.0, scale) * es.eigenvalues().array().cast<Complex>()).exp();
    return es.eigenvectors() * phases.matrix().asDiagonal() *
           es.eigenvectors().adjoint();
}

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }
inline double max_abs(const Vector& v) { return v.cwiseAbs().maxCoeff(); }

} // namespace dstirap
