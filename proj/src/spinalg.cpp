#include "incevolkov/spinalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "incevolkov/errors.hpp"

namespace incevolkov::spinalg {

namespace {

constexpr Complex I{0.0, 1.0};

Eigen::Matrix2cd pauli(int which) {
    Eigen::Matrix2cd s;
    switch (which) {
        case 1: s << 0, 1, 1, 0; break;
        case 2: s << 0, -I, I, 0; break;
        default: s << 1, 0, 0, -1; break;
    }
    return s;
}

Matrix4c blocks(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b, const Eigen::Matrix2cd& c,
                const Eigen::Matrix2cd& d) {
    Matrix4c m;
    m << a, b, c, d;
    return m;
}

// Orthonormal basis of the column space of `projector`, scanning columns in
// index order (modified Gram-Schmidt). Stops after `rank` vectors.
std::array<Vector4c, 2> column_basis(const Matrix4c& projector) {
    std::array<Vector4c, 2> basis;
    int found = 0;
    const double scale = projector.cwiseAbs().maxCoeff();
    for (int col = 0; col < 4 && found < 2; ++col) {
        Vector4c v = projector.col(col);
        for (int j = 0; j < found; ++j) v -= basis[j].dot(v) * basis[j];
        const double norm = v.norm();
        if (norm > 1e-8 * scale) basis[found++] = v / norm;
    }
    if (found != 2) throw StructuralError("spin eigenspace is not two-dimensional");
    return basis;
}

}  // namespace

Matrix4c GammaSet::anticommutator(int mu, int nu) const {
    return gamma[mu] * gamma[nu] + gamma[nu] * gamma[mu];
}

Matrix4c GammaSet::slash(const std::array<double, 4>& v) const {
    Matrix4c out = Matrix4c::Zero();
    for (int mu = 0; mu < 4; ++mu) out += metric[mu] * v[mu] * gamma[mu];
    return out;
}

GammaSet build_majorana_gammas() {
    const Eigen::Matrix2cd zero = Eigen::Matrix2cd::Zero();
    const Eigen::Matrix2cd s1 = pauli(1), s2 = pauli(2), s3 = pauli(3);
    GammaSet set;
    set.gamma[0] = blocks(zero, s2, s2, zero);
    set.gamma[1] = blocks(I * s3, zero, zero, I * s3);
    set.gamma[2] = blocks(zero, -s2, s2, zero);
    set.gamma[3] = blocks(-I * s1, zero, zero, -I * s1);
    return set;
}

SpinEigensystem spin_interaction_matrix(double n_m, const GammaSet& gammas) {
    if (!(n_m > 0.0 && n_m < 1.0)) {
        throw DomainError("refractive index must lie in (0, 1), got " + std::to_string(n_m));
    }
    SpinEigensystem sys;
    // k0 factored out: k / k0 = (1, 0, n_m, 0).
    sys.matrix = gammas.slash({1.0, 0.0, n_m, 0.0}) * gammas.slash({0.0, 1.0, 0.0, 0.0});

    Eigen::ComplexEigenSolver<Matrix4c> solver(sys.matrix, false);
    if (solver.info() != Eigen::Success) throw StructuralError("spin eigensolver failed");
    std::array<double, 4> values{};
    for (int i = 0; i < 4; ++i) values[i] = solver.eigenvalues()[i].real();
    std::sort(values.begin(), values.end(), std::greater<>());
    sys.eigenvalues = values;
    sys.lambda = std::sqrt((1.0 - n_m) * (1.0 + n_m));

    // M^2 = lambda^2, so (1 +- M/lambda)/2 project onto the +-lambda subspaces.
    const Matrix4c identity = Matrix4c::Identity();
    const Matrix4c plus = 0.5 * (identity + sys.matrix / sys.lambda);
    const Matrix4c minus = 0.5 * (identity - sys.matrix / sys.lambda);
    const auto up = column_basis(plus);
    const auto down = column_basis(minus);
    sys.eigenvectors = {up[0], up[1], down[0], down[1]};
    return sys;
}

}  // namespace incevolkov::spinalg
