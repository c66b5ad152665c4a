// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>
#include <utility>
#include <vector>

#include "dstirap/core.hpp"
#include "dstirap/linalg.hpp"
#include "dstirap/pulses.hpp"

namespace dstirap {

/// Two 3-level atoms and a photon-number-truncated cavity mode. Basis order
/// is atom A (slowest) x atom B x cavity photon number.
struct HilbertSpace {
    int n_max = 1;

    explicit HilbertSpace(int n_max_ = 1) : n_max(n_max_) {
        if (n_max < 1) throw std::invalid_argument("HilbertSpace: n_max must be >= 1");
    }

    int dim() const { return 9 * (n_max + 1); }

    int index(int a, int b, int n) const {
        if (a < 0 || a > 2 || b < 0 || b > 2 || n < 0 || n > n_max)
            throw std::out_of_range("HilbertSpace::index: level out of range");
        return (a * 3 + b) * (n_max + 1) + n;
    }

    std::array<int, 3> levels(int flat) const {
        if (flat < 0 || flat >= dim())
            throw std::out_of_range("HilbertSpace::levels: index out of range");
        const int n = flat % (n_max + 1);
        const int ab = flat / (n_max + 1);
        return {ab / 3, ab % 3, n};
    }

    Vector ket(int a, int b, int n) const {
        Vector v = Vector::Zero(dim());
        v(index(a, b, n)) = 1.0;
        return v;
    }
};

/// Atom-cavity coupling, equal for both atoms, in units of omega0.
struct SystemParams {
    double g = 10.0;

    void validate() const {
        if (!(g > 0.0)) throw std::invalid_argument("SystemParams: g must be positive");
    }
};

/// Cavity decay rate kappa and per-channel spontaneous emission rate gamma,
/// in units of omega0.
struct DecoherenceParams {
    double kappa = 0.0;
    double gamma = 0.0;

    void validate() const {
        if (kappa < 0.0 || gamma < 0.0)
            throw std::invalid_argument("DecoherenceParams: rates must be nonnegative");
    }
    bool closed() const { return kappa == 0.0 && gamma == 0.0; }
};

/// |m><n| of one atom (0 = A, 1 = B), embedded in the full space.
inline Matrix atom_op(const HilbertSpace& space, int atom, int m, int n) {
    if (atom != 0 && atom != 1) throw std::invalid_argument("atom_op: atom must be 0 or 1");
    Matrix op3 = Matrix::Zero(3, 3);
    op3(m, n) = 1.0;
    const Matrix id3 = Matrix::Identity(3, 3);
    const Matrix idc = Matrix::Identity(space.n_max + 1, space.n_max + 1);
    return atom == 0 ? tensor_product(tensor_product(op3, id3), idc)
                     : tensor_product(tensor_product(id3, op3), idc);
}

inline Matrix cavity_annihilation(const HilbertSpace& space) {
    Matrix a = Matrix::Zero(space.n_max + 1, space.n_max + 1);
    for (int n = 0; n < space.n_max; ++n) a(n, n + 1) = std::sqrt(n + 1.0);
    const Matrix id9 = Matrix::Identity(9, 9);
    return tensor_product(id9, a);
}

/// Constant structure parts of the interaction Hamiltonian
///   H(t) = wA(t) * drive_a_part + wB(t) * drive_b_part + cavity_part,
/// with cavity_part already scaled by g.
struct TotalHamiltonian {
    Matrix drive_a_part, drive_b_part, cavity_part;

    TotalHamiltonian(const HilbertSpace& space, const SystemParams& sys) {
        sys.validate();
        const Matrix a = cavity_annihilation(space);
        drive_a_part = atom_op(space, 0, 2, 0);
        drive_a_part += drive_a_part.adjoint().eval();
        drive_b_part = atom_op(space, 1, 2, 0);
        drive_b_part += drive_b_part.adjoint().eval();
        Matrix c = a * (atom_op(space, 0, 2, 1) + atom_op(space, 1, 2, 1));
        cavity_part = sys.g * (c + c.adjoint().eval());
    }

    void assemble(double drive_a, double drive_b, Matrix& out) const {
        out = cavity_part;
        out += drive_a * drive_a_part;
        out += drive_b * drive_b_part;
    }

    /// out = H(t) psi without forming H.
    void apply(double drive_a, double drive_b, const Vector& psi, Vector& out) const {
        out.noalias() = cavity_part * psi;
        out.noalias() += drive_a * (drive_a_part * psi);
        out.noalias() += drive_b * (drive_b_part * psi);
    }
};

inline Matrix build_total_hamiltonian(const HilbertSpace& space, const SystemParams& sys,
                                      double drive_a, double drive_b) {
    Matrix h(space.dim(), space.dim());
    TotalHamiltonian(space, sys).assemble(drive_a, drive_b, h);
    return h;
}

/// The five-state single-excitation manifold and the bright pair state
/// phi_d = (-phi2 + phi4)/sqrt(2), as full-space vectors.
struct ZenoBasis {
    Vector phi1, phi2, phi3, phi4, phi5, phi_d;

    explicit ZenoBasis(const HilbertSpace& space)
        : phi1(space.ket(0, 1, 0)),
          phi2(space.ket(2, 1, 0)),
          phi3(space.ket(1, 1, 1)),
          phi4(space.ket(1, 2, 0)),
          phi5(space.ket(1, 0, 0)),
          phi_d((-phi2 + phi4) / std::sqrt(2.0)) {}

    std::vector<Vector> manifold() const { return {phi1, phi2, phi3, phi4, phi5}; }
};

/// Effective couplings of the Zeno-projected three-level model:
/// omega1 = -Omega_A/sqrt(2), omega2 = Omega_B/sqrt(2).
inline PulsePair zeno_project(double drive_a, double drive_b) {
    const double r = std::sqrt(2.0);
    return {-drive_a / r, drive_b / r};
}

/// 3x3 Hamiltonian in the ordered basis {phi1, phi_d, phi5}.
inline Matrix effective_hamiltonian(double omega1, double omega2) {
    Matrix h = Matrix::Zero(3, 3);
    h(0, 1) = omega1;
    h(1, 0) = omega1;
    h(1, 2) = omega2;
    h(2, 1) = omega2;
    return h;
}

/// Instantaneous eigenstates of the effective Hamiltonian in the
/// {phi1, phi_d, phi5} basis: dark (E = 0) and bright pair (E = +-Omega).
struct AdiabaticStates {
    Vector dark, plus, minus;
};

inline AdiabaticStates adiabatic_eigenstates(double theta) {
    if (theta < 0.0 || theta > pi / 2.0)
        throw std::invalid_argument("adiabatic_eigenstates: theta outside [0, pi/2]");
    const double s = std::sin(theta), c = std::cos(theta);
    const double r = 1.0 / std::sqrt(2.0);
    AdiabaticStates st;
    st.dark = Vector::Zero(3);
    st.dark << c, 0.0, s;
    st.plus = Vector::Zero(3);
    st.plus << r * s, -r, -r * c;
    st.minus = Vector::Zero(3);
    st.minus << r * s, r, -r * c;
    return st;
}

/// Generators and frame maps in the time-independent label basis
/// {dark, plus, minus}; U maps lab coordinates to labels, V = exp(i mu Mx).
struct FrameOperators {
    Matrix Mx, My, Mz;
    Matrix U;
    Matrix V;
};

inline FrameOperators frame_operators(double theta, double mu) {
    const double r = 1.0 / std::sqrt(2.0);
    FrameOperators f;
    f.Mx = Matrix::Zero(3, 3);
    f.Mx(2, 0) = r;  // (|minus> - |plus>)<dark| / sqrt(2) + h.c.
    f.Mx(1, 0) = -r;
    f.Mx(0, 2) = r;
    f.Mx(0, 1) = -r;
    f.My = Matrix::Zero(3, 3);
    f.My(1, 0) = Complex(0, r); // i(|plus> + |minus>)<dark| / sqrt(2) + h.c.
    f.My(2, 0) = Complex(0, r);
    f.My(0, 1) = Complex(0, -r);
    f.My(0, 2) = Complex(0, -r);
    f.Mz = Matrix::Zero(3, 3);
    f.Mz(1, 1) = 1.0;
    f.Mz(2, 2) = -1.0;
    const AdiabaticStates st = adiabatic_eigenstates(theta);
    f.U = Matrix::Zero(3, 3);
    f.U.row(0) = st.dark.adjoint();
    f.U.row(1) = st.plus.adjoint();
    f.U.row(2) = st.minus.adjoint();
    f.V = hermitian_expm(f.Mx, mu);
    return f;
}

/// H_c = U^dag (g_x Mx + g_z Mz) U in the {phi1, phi_d, phi5} basis.
inline Matrix correction_hamiltonian(double theta, double mu, double g_x, double g_z) {
    const FrameOperators f = frame_operators(theta, mu);
    return f.U.adjoint() * (g_x * f.Mx + g_z * f.Mz) * f.U;
}

/// Dark dressed state cos(mu)[cos(theta) phi1 + sin(theta) phi5]
/// + i sin(mu) phi_d, in the {phi1, phi_d, phi5} basis.
inline Vector dressed_dark_state(double theta, double mu) {
    Vector v(3);
    v << std::cos(mu) * std::cos(theta), Complex(0.0, std::sin(mu)),
        std::cos(mu) * std::sin(theta);
    return v;
}

/// Diagonal and off-diagonal coefficients of the dressed-frame Hamiltonian.
struct DressedCoefficients {
    double eta;
    Complex xi;
};

inline DressedCoefficients dressed_frame_coefficients(double omega, double theta_dot,
                                                      double mu, double mu_dot,
                                                      double g_x, double g_z) {
    const double s = std::sin(mu), c = std::cos(mu);
    DressedCoefficients d;
    d.eta = (g_z + omega) * c - theta_dot * s;
    d.xi = (Complex(0.0, (g_z + omega) * s) + Complex(0.0, theta_dot * c) +
            Complex(mu_dot - g_x, 0.0)) /
           std::sqrt(2.0);
    return d;
}

/// Jump operators of the master equation with the rate square roots folded
/// in: sqrt(gamma) sigma^j_{i,2} for both atoms and i in {0,1}, plus
/// sqrt(kappa) a. Zero-rate channels are dropped.
inline std::vector<Matrix> lindblad_operators(const HilbertSpace& space,
                                              const DecoherenceParams& dec) {
    dec.validate();
    std::vector<Matrix> ops;
    if (dec.gamma > 0.0) {
        const double r = std::sqrt(dec.gamma);
        for (int atom = 0; atom < 2; ++atom)
            for (int i = 0; i < 2; ++i) ops.push_back(r * atom_op(space, atom, i, 2));
    }
    if (dec.kappa > 0.0) ops.push_back(std::sqrt(dec.kappa) * cavity_annihilation(space));
    return ops;
}

} // namespace dstirap
