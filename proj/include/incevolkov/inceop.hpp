#pragma once

#include <vector>

#include "incevolkov/family.hpp"

// Finite three-term-recurrence operators whose eigenpairs are the
// polynomial solutions of the complex generalized Ince equation (Dirac)
//
//   f'' + a sin2z (f' +- i f) + (eta - q a cos2z) f = 0,        z = xi / 2,
//
// and of Ince's equation (Klein-Gordon)
//
//   w'' + a sin2z w' + (eta - q a cos2z) w = 0.
//
// Substituting f = sum_r c_r exp(-i r xi) and collecting exp(-i m xi) gives
//
//   eta c_m = 4 m^2 c_m + up(m) c_{m+1} + down(m) c_{m-1}
//
// with, for the three equations,
//
//   Dirac (+i f):  up = a/2 (2m + 1 + q),  down = a/2 (q + 3 - 2m)
//   Dirac (-i f):  up = a/2 (2m + 3 + q),  down = a/2 (q + 1 - 2m)
//   Ince:          up = a/2 (2m + 2 + q),  down = a/2 (q + 2 - 2m)
//
// For q = 2n - 1 the Dirac couplings vanish on the edges of the windows
// m = -n+1..n (+i) and m = -n..n-1 (-i). For Ince's equation down(m) = 0 at
// m = q/2 + 1, closing the cos/sin windows from above; the parity of the
// cos/sin basis folds c_{-m} = +-c_m into the lowest row:
//   cos(r xi), r = 0..n        (q = 2n):      row 1 couples to r = 0 with 2 down(1)
//   sin(r xi), r = 1..n        (q = 2n):      c_0 = 0, no folding term
//   cos/sin(r xi), r = 1/2..n+1/2 (q = 2n+1): diag(1/2) += / -= down(1/2)
namespace incevolkov::inceop {

struct TridiagonalOperator {
    SolutionFamily family;
    double a{};
    std::vector<double> basis;   // harmonic r of each row
    std::vector<double> diag;    // size dim
    std::vector<double> super;   // super[i] = T(i, i+1), size dim-1
    std::vector<double> sub;     // sub[i]   = T(i+1, i), size dim-1

    int dim() const { return static_cast<int>(diag.size()); }
};

// Recurrence coefficients of row m for the family's equation, before any
// parity folding. Defined for any harmonic m, inside the window or not.
struct RowCoefficients {
    double diag{};
    double up{};
    double down{};
};
RowCoefficients row_coefficients(const SolutionFamily& family, double a, double m);

TridiagonalOperator build_dirac_operator(int n, double a, int sign);
TridiagonalOperator build_kg_operator(FamilyKind kind, int n, double a);
// Dispatches on family.kind.
TridiagonalOperator build_operator(const SolutionFamily& family, double a);

// The family's window padded by `extra` rows above (and below for the
// two-sided Dirac windows), using the unfolded row coefficients.
struct ExtendedOperator {
    TridiagonalOperator op;
    int window_begin{};  // first row of the original window
    int window_end{};    // one past the last row of the original window

    // Couplings from window rows into the padding; zero when the window closes.
    double coupling_into_top() const;
    double coupling_into_bottom() const;
};
ExtendedOperator build_extended_operator(const SolutionFamily& family, double a, int extra);

}  // namespace incevolkov::inceop
