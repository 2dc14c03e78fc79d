#pragma once

#include <vector>

#include <Eigen/Dense>

#include "incevolkov/inceop.hpp"

namespace incevolkov::eigensolve {

// Relative gap below which two neighbouring eigenvalues count as unresolved.
inline constexpr double distinct_gap_threshold = 1e-8;

struct SymmetricTridiagonal {
    std::vector<double> diag;
    std::vector<double> off;  // off[i] = S(i, i+1) = S(i+1, i)

    int dim() const { return static_cast<int>(diag.size()); }
};

struct Symmetrized {
    SymmetricTridiagonal matrix;
    std::vector<double> scale;  // S = D T D^-1 with D = diag(scale), scale[0] = 1
};

// Diagonal similarity to a symmetric tridiagonal. Throws StructuralError when
// an off-diagonal product super*sub is not positive for a > 0.
Symmetrized symmetrize(const inceop::TridiagonalOperator& op);

struct SpectralDecomposition {
    SolutionFamily family;
    double a{};
    Eigen::VectorXd etas;      // ascending
    Eigen::MatrixXd vectors;   // column j belongs to etas[j]
    Eigen::VectorXd scale;     // symmetrizing similarity used by the solve
    std::vector<int> k_labels;  // k_labels[j]; k = 1 is the top of the spectrum
    std::vector<double> residuals;  // filled by verify::attach_residuals

    int dim() const { return static_cast<int>(etas.size()); }
    // Column index of the eigenpair labelled k.
    int column_of_label(int k) const;
    // min_j (etas[j+1] - etas[j]) / (etas.max - etas.min); 1 for dim < 2.
    double min_relative_gap() const;
    bool distinct() const { return min_relative_gap() > distinct_gap_threshold; }
};

// Eigenvalues (ascending) and orthonormal eigenvectors of a symmetric
// tridiagonal by the implicit QL method with Wilkinson shifts.
struct SymmetricEigenpairs {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;
};
SymmetricEigenpairs implicit_ql(const SymmetricTridiagonal& s);

// Full solve: symmetrize, diagonalize, back-transform, normalize each
// coefficient vector to unit Euclidean norm and make its largest-magnitude
// component positive.
SpectralDecomposition solve_spectrum(const inceop::TridiagonalOperator& op);

// Independent Sturm-sequence bisection. Each eigenvalue is bracketed to
// width `tol` (or to adjacent doubles). Throws ConvergenceError when the
// iteration budget runs out.
std::vector<double> sturm_bisection_oracle(const SymmetricTridiagonal& s, double tol,
                                           int max_iterations = 4000);
// Number of eigenvalues strictly below x.
int sturm_count(const SymmetricTridiagonal& s, double x);

// Near-degenerate pairing of a spectrum ("hyperfine splitting"): adjacent
// eigenvalues paired from the top, splitting relative to the distance to
// the next pair. Report-only.
struct PairSplitting {
    int upper_k{};
    double eta_low{};
    double eta_high{};
    double splitting{};
    double relative_splitting{};
};
std::vector<PairSplitting> pair_splittings(const SpectralDecomposition& decomposition);

}  // namespace incevolkov::eigensolve
