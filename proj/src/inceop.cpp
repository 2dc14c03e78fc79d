#include "incevolkov/inceop.hpp"

#include <cmath>
#include <string>

#include "incevolkov/errors.hpp"

namespace incevolkov::inceop {

namespace {

void check_inputs(int n, double a) {
    if (n < 1) throw DomainError("quantum number n must be >= 1, got " + std::to_string(n));
    if (!(a >= 0.0) || !std::isfinite(a)) {
        throw DomainError("coupling parameter a must be finite and >= 0");
    }
}

void check_symmetrizable(const TridiagonalOperator& op) {
    if (op.a == 0.0) return;
    for (std::size_t i = 0; i < op.super.size(); ++i) {
        if (!(op.super[i] * op.sub[i] > 0.0)) {
            throw StructuralError("recurrence for " + std::string(family_name(op.family.kind)) +
                                  " is not symmetrizable at row " + std::to_string(i));
        }
    }
}

}  // namespace

RowCoefficients row_coefficients(const SolutionFamily& family, double a, double m) {
    const double q = family.q();
    RowCoefficients row;
    row.diag = 4.0 * m * m;
    switch (family.kind) {
        case FamilyKind::DiracPlus:
            row.up = 0.5 * a * (2.0 * m + 1.0 + q);
            row.down = 0.5 * a * (q + 3.0 - 2.0 * m);
            break;
        case FamilyKind::DiracMinus:
            row.up = 0.5 * a * (2.0 * m + 3.0 + q);
            row.down = 0.5 * a * (q + 1.0 - 2.0 * m);
            break;
        default:
            row.up = 0.5 * a * (2.0 * m + 2.0 + q);
            row.down = 0.5 * a * (q + 2.0 - 2.0 * m);
            break;
    }
    return row;
}

TridiagonalOperator build_operator(const SolutionFamily& family, double a) {
    check_inputs(family.n, a);
    TridiagonalOperator op;
    op.family = family;
    op.a = a;
    op.basis = family.basis_frequencies();
    const int dim = family.dimension();
    op.diag.resize(dim);
    op.super.resize(dim > 0 ? dim - 1 : 0);
    op.sub.resize(dim > 0 ? dim - 1 : 0);

    for (int i = 0; i < dim; ++i) {
        const RowCoefficients row = row_coefficients(family, a, op.basis[i]);
        op.diag[i] = row.diag;
        if (i + 1 < dim) op.super[i] = row.up;
        if (i > 0) op.sub[i - 1] = row.down;
    }

    // Parity folding of the lowest row of the cos/sin bases.
    switch (family.kind) {
        case FamilyKind::KgCosEven:
            if (dim > 1) op.sub[0] *= 2.0;
            break;
        case FamilyKind::KgCosOdd:
            op.diag[0] += row_coefficients(family, a, 0.5).down;
            break;
        case FamilyKind::KgSinOdd:
            op.diag[0] -= row_coefficients(family, a, 0.5).down;
            break;
        default:
            break;
    }
    check_symmetrizable(op);
    return op;
}

TridiagonalOperator build_dirac_operator(int n, double a, int sign) {
    if (sign != 1 && sign != -1) throw DomainError("Dirac sign must be +1 or -1");
    check_inputs(n, a);
    return build_operator(make_family(sign > 0 ? FamilyKind::DiracPlus : FamilyKind::DiracMinus, n), a);
}

TridiagonalOperator build_kg_operator(FamilyKind kind, int n, double a) {
    if (is_dirac(kind)) throw DomainError("build_kg_operator needs a Klein-Gordon family");
    check_inputs(n, a);
    return build_operator(make_family(kind, n), a);
}

double ExtendedOperator::coupling_into_top() const {
    // Row window_end couples back into the window through sub[window_end - 1].
    if (window_end >= op.dim()) return 0.0;
    return op.sub[window_end - 1];
}

double ExtendedOperator::coupling_into_bottom() const {
    if (window_begin == 0) return 0.0;
    return op.super[window_begin - 1];
}

ExtendedOperator build_extended_operator(const SolutionFamily& family, double a, int extra) {
    if (extra < 0) throw DomainError("extra rows must be >= 0");
    ExtendedOperator ext;
    ext.op = build_operator(family, a);
    const std::vector<double> window = ext.op.basis;
    const int below = is_dirac(family.kind) ? extra : 0;

    std::vector<double> basis;
    for (int i = below; i > 0; --i) basis.push_back(window.front() - i);
    basis.insert(basis.end(), window.begin(), window.end());
    for (int i = 1; i <= extra; ++i) basis.push_back(window.back() + i);

    const int dim = static_cast<int>(basis.size());
    TridiagonalOperator& op = ext.op;
    std::vector<double> diag(dim), super(dim - 1), sub(dim - 1);
    for (int i = 0; i < dim; ++i) {
        const RowCoefficients row = row_coefficients(family, a, basis[i]);
        diag[i] = row.diag;
        if (i + 1 < dim) super[i] = row.up;
        if (i > 0) sub[i - 1] = row.down;
    }
    // Keep the folded window rows exactly as build_operator made them.
    const int w = static_cast<int>(window.size());
    for (int i = 0; i < w; ++i) diag[below + i] = op.diag[i];
    for (int i = 0; i + 1 < w; ++i) {
        super[below + i] = op.super[i];
        sub[below + i] = op.sub[i];
    }
    op.basis = std::move(basis);
    op.diag = std::move(diag);
    op.super = std::move(super);
    op.sub = std::move(sub);
    ext.window_begin = below;
    ext.window_end = below + w;
    return ext;
}

}  // namespace incevolkov::inceop
