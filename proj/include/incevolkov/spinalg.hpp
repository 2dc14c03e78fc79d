#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

// Gamma-matrix algebra in the Majorana representation and the eigenproblem
// of the spin-field coupling matrix (gamma.k)(gamma.e_x) / k0.
namespace incevolkov::spinalg {

using Complex = std::complex<double>;
using Matrix4c = Eigen::Matrix<Complex, 4, 4>;
using Vector4c = Eigen::Matrix<Complex, 4, 1>;

struct GammaSet {
    std::array<Matrix4c, 4> gamma;            // gamma^0 .. gamma^3 (upper index)
    std::array<double, 4> metric{1, -1, -1, -1};  // diag(g^{mu mu})

    // gamma^mu gamma^nu + gamma^nu gamma^mu
    Matrix4c anticommutator(int mu, int nu) const;
    // gamma . v = g_{mu nu} gamma^mu v^nu for a contravariant four-vector.
    Matrix4c slash(const std::array<double, 4>& v) const;
};

// Purely imaginary gamma matrices obeying the Clifford relation.
GammaSet build_majorana_gammas();

struct SpinEigensystem {
    Matrix4c matrix;                  // (gamma.k)(gamma.e_x) / k0
    std::array<double, 4> eigenvalues{};  // +lambda, +lambda, -lambda, -lambda
    std::array<Vector4c, 4> eigenvectors;  // u_1 .. u_4, unit norm
    double lambda{};
};

// Builds M for k = k0 (1, 0, n_m, 0), e_x = (0, 1, 0, 0) and diagonalizes it.
// Eigenvectors within each degenerate pair are orthonormalized in index
// order so the basis is reproducible. Throws DomainError unless 0 < n_m < 1.
SpinEigensystem spin_interaction_matrix(double n_m, const GammaSet& gammas);

}  // namespace incevolkov::spinalg
