#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "incevolkov/constants.hpp"
#include "incevolkov/errors.hpp"
#include "incevolkov/inceop.hpp"

using namespace incevolkov;
using namespace incevolkov::inceop;
using Cplx = std::complex<double>;

namespace {

// Quadrature oracle: applies L0 = d^2 + a sin2z d (+- i a sin2z) - q a cos2z
// to each basis function analytically and projects back onto the basis with
// an N-point rule on [0, 2 pi), which is exact for these trig polynomials.
// eta c = T c then reads T(m, r) = -<phi_m, L0 phi_r> / <phi_m, phi_m>.
struct Projector {
    FamilyKind kind;
    double a;
    double q;
    static constexpr int points = 512;

    Cplx phi(double r, double z) const {
        if (is_dirac(kind)) return std::polar(1.0, -2.0 * r * z);
        return is_cosine(kind) ? Cplx(std::cos(2.0 * r * z)) : Cplx(std::sin(2.0 * r * z));
    }
    Cplx dphi(double r, double z) const {
        if (is_dirac(kind)) return Cplx(0.0, -2.0 * r) * phi(r, z);
        return is_cosine(kind) ? Cplx(-2.0 * r * std::sin(2.0 * r * z))
                               : Cplx(2.0 * r * std::cos(2.0 * r * z));
    }
    Cplx l0_phi(double r, double z) const {
        const Cplx d2 = -4.0 * r * r * phi(r, z);
        Cplx first = dphi(r, z);
        if (kind == FamilyKind::DiracPlus) first += Cplx(0.0, 1.0) * phi(r, z);
        if (kind == FamilyKind::DiracMinus) first -= Cplx(0.0, 1.0) * phi(r, z);
        return d2 + a * std::sin(2.0 * z) * first - q * a * std::cos(2.0 * z) * phi(r, z);
    }
    // -<phi_m, L0 phi_r> / <phi_m, phi_m>
    Cplx entry(double m, double r) const {
        Cplx num = 0.0, den = 0.0;
        for (int i = 0; i < points; ++i) {
            const double z = 2.0 * constants::pi * i / points;
            num += std::conj(phi(m, z)) * l0_phi(r, z);
            den += std::norm(phi(m, z));
        }
        return -num / den;
    }
};

Projector projector_for(const SolutionFamily& f, double a) {
    return {f.kind, a, static_cast<double>(f.q())};
}

double entry_scale(const SolutionFamily& f, double a) {
    return 1.0 + 4.0 * (f.n + 1) * (f.n + 1) + a * (2 * f.n + 3);
}

}  // namespace

TEST_SUITE("inceop") {

TEST_CASE("family bookkeeping") {
    CHECK(make_family(FamilyKind::DiracPlus, 20).dimension() == 40);
    CHECK(make_family(FamilyKind::DiracMinus, 20).dimension() == 40);
    CHECK(make_family(FamilyKind::KgCosEven, 20).dimension() == 21);
    CHECK(make_family(FamilyKind::KgSinEven, 20).dimension() == 20);
    CHECK(make_family(FamilyKind::KgCosOdd, 20).dimension() == 21);
    CHECK(make_family(FamilyKind::KgSinOdd, 20).dimension() == 21);
    CHECK(make_family(FamilyKind::DiracPlus, 20).q() == 39);
    CHECK(make_family(FamilyKind::KgCosEven, 20).q() == 40);
    CHECK(make_family(FamilyKind::KgCosOdd, 20).q() == 41);
    const std::vector<double> plus = make_family(FamilyKind::DiracPlus, 2).basis_frequencies();
    CHECK(plus == std::vector<double>{-1, 0, 1, 2});
    const std::vector<double> minus = make_family(FamilyKind::DiracMinus, 2).basis_frequencies();
    CHECK(minus == std::vector<double>{-2, -1, 0, 1});
    const std::vector<double> odd = make_family(FamilyKind::KgSinOdd, 1).basis_frequencies();
    CHECK(odd == std::vector<double>{0.5, 1.5});
    CHECK_THROWS_AS(make_family(FamilyKind::DiracPlus, 0), DomainError);
    for (FamilyKind kind : all_family_kinds) CHECK(parse_family(family_name(kind)) == kind);
    CHECK(parse_family("dirac") == FamilyKind::DiracPlus);
    CHECK_THROWS_AS(parse_family("mathieu"), DomainError);
}

TEST_CASE("a = 0 operators are diagonal with 4 r^2") {
    for (FamilyKind kind : all_family_kinds) {
        for (int n = 1; n <= 6; ++n) {
            const SolutionFamily f = make_family(kind, n);
            const TridiagonalOperator op = build_operator(f, 0.0);
            const std::vector<double> r = f.basis_frequencies();
            REQUIRE(op.dim() == f.dimension());
            for (int i = 0; i < op.dim(); ++i) CHECK(op.diag[i] == 4.0 * r[i] * r[i]);
            for (int i = 0; i + 1 < op.dim(); ++i) {
                CHECK(op.super[i] == 0.0);
                CHECK(op.sub[i] == 0.0);
            }
        }
    }
}

TEST_CASE("2x2 operators") {
    for (double a : {0.5, 3.0, 14.0}) {
        const TridiagonalOperator d = build_dirac_operator(1, a, +1);
        CHECK(d.diag == std::vector<double>{0.0, 4.0});
        CHECK(d.super[0] == doctest::Approx(a));
        CHECK(d.sub[0] == doctest::Approx(a));
        const TridiagonalOperator k = build_kg_operator(FamilyKind::KgCosEven, 1, a);
        CHECK(k.diag == std::vector<double>{0.0, 4.0});
        CHECK(k.super[0] == doctest::Approx(2.0 * a));
        CHECK(k.sub[0] == doctest::Approx(2.0 * a));
    }
    CHECK_THROWS_AS(build_dirac_operator(1, 1.0, 0), DomainError);
    CHECK_THROWS_AS(build_dirac_operator(1, -1.0, 1), DomainError);
    CHECK_THROWS_AS(build_kg_operator(FamilyKind::DiracPlus, 1, 1.0), DomainError);
}

TEST_CASE("operators match the Fourier projection of the ODE") {
    for (FamilyKind kind : all_family_kinds) {
        for (int n : {1, 2, 3, 7, 12}) {
            for (double a : {0.5, 5.0, 20.0}) {
                const SolutionFamily f = make_family(kind, n);
                const TridiagonalOperator op = build_operator(f, a);
                const Projector p = projector_for(f, a);
                const std::vector<double> r = f.basis_frequencies();
                const double tol = 1e-12 * entry_scale(f, a);
                for (int i = 0; i < op.dim(); ++i) {
                    for (int j = 0; j < op.dim(); ++j) {
                        double expected = 0.0;
                        if (j == i) expected = op.diag[i];
                        if (j == i + 1) expected = op.super[i];
                        if (j == i - 1) expected = op.sub[j];
                        const Cplx e = p.entry(r[i], r[j]);
                        INFO(family_name(kind), " n=", n, " a=", a, " row ", i, " col ", j);
                        CHECK(std::abs(e.imag()) < tol);
                        CHECK(std::abs(e.real() - expected) < tol);
                    }
                }
            }
        }
    }
}

TEST_CASE("closure: the operator leaks nothing outside the window") {
    for (FamilyKind kind : all_family_kinds) {
        for (int n = 1; n <= 25; ++n) {
            const SolutionFamily f = make_family(kind, n);
            const double a = 7.0;
            const ExtendedOperator ext = build_extended_operator(f, a, 3);
            CHECK(ext.window_end - ext.window_begin == f.dimension());
            CHECK(ext.op.dim() == f.dimension() + (is_dirac(kind) ? 6 : 3));
            CHECK(ext.coupling_into_top() == 0.0);
            if (is_dirac(kind)) CHECK(ext.coupling_into_bottom() == 0.0);
            // Extra rows exist and couple among themselves.
            CHECK(ext.op.super[ext.window_end] != 0.0);
        }
    }
    // The same statement from the quadrature side.
    for (FamilyKind kind : all_family_kinds) {
        for (int n : {1, 4, 9}) {
            const SolutionFamily f = make_family(kind, n);
            const Projector p = projector_for(f, 3.0);
            const std::vector<double> r = f.basis_frequencies();
            const double tol = 1e-12 * entry_scale(f, 3.0);
            for (double rr : r) {
                CHECK(std::abs(p.entry(r.back() + 1.0, rr)) < tol);
                if (is_dirac(kind)) CHECK(std::abs(p.entry(r.front() - 1.0, rr)) < tol);
            }
        }
    }
}

TEST_CASE("symmetrizability") {
    for (FamilyKind kind : all_family_kinds) {
        for (int n = 1; n <= 25; ++n) {
            for (double a : {0.5, 1.0, 5.0, 14.0, 20.0}) {
                const TridiagonalOperator op = build_operator(make_family(kind, n), a);
                for (int i = 0; i + 1 < op.dim(); ++i) CHECK(op.super[i] * op.sub[i] > 0.0);
            }
        }
    }
}

TEST_CASE("entries are finite") {
    const TridiagonalOperator op = build_operator(make_family(FamilyKind::DiracPlus, 25), 20.0);
    for (double v : op.diag) CHECK(std::isfinite(v));
    for (double v : op.super) CHECK(std::isfinite(v));
    for (double v : op.sub) CHECK(std::isfinite(v));
}

TEST_CASE("row coefficients") {
    // Dirac +: up = a/2 (2m + 1 + q), down = a/2 (q + 3 - 2m)
    const SolutionFamily f = make_family(FamilyKind::DiracPlus, 3);
    const RowCoefficients c = row_coefficients(f, 2.0, 1.0);
    CHECK(c.diag == 4.0);
    CHECK(c.up == doctest::Approx(2.0 + 1.0 + 5.0));
    CHECK(c.down == doctest::Approx(5.0 + 3.0 - 2.0));
}

}  // TEST_SUITE
