#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "incevolkov/eigensolve.hpp"
#include "incevolkov/errors.hpp"
#include "incevolkov/inceop.hpp"

using namespace incevolkov;
using namespace incevolkov::eigensolve;

namespace {

SpectralDecomposition solve(FamilyKind kind, int n, double a) {
    return solve_spectrum(inceop::build_operator(make_family(kind, n), a));
}

SymmetricTridiagonal random_tridiagonal(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    SymmetricTridiagonal s;
    for (int i = 0; i < n; ++i) s.diag.push_back(u(rng));
    for (int i = 0; i + 1 < n; ++i) s.off.push_back(u(rng));
    return s;
}

Eigen::MatrixXd dense(const SymmetricTridiagonal& s) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(s.dim(), s.dim());
    for (int i = 0; i < s.dim(); ++i) m(i, i) = s.diag[i];
    for (int i = 0; i + 1 < s.dim(); ++i) m(i, i + 1) = m(i + 1, i) = s.off[i];
    return m;
}

}  // namespace

TEST_SUITE("eigensolve") {

TEST_CASE("closed-form 2x2 spectra") {
    for (double a : {0.0, 0.5, 3.0, 14.0, 20.0}) {
        const SpectralDecomposition d = solve(FamilyKind::DiracPlus, 1, a);
        CHECK(std::abs(d.etas[0] - (2.0 - std::sqrt(4.0 + a * a))) < 1e-12);
        CHECK(std::abs(d.etas[1] - (2.0 + std::sqrt(4.0 + a * a))) < 1e-12);
        const SpectralDecomposition k = solve(FamilyKind::KgCosEven, 1, a);
        CHECK(std::abs(k.etas[0] - (2.0 - 2.0 * std::sqrt(1.0 + a * a))) < 1e-12);
        CHECK(std::abs(k.etas[1] - (2.0 + 2.0 * std::sqrt(1.0 + a * a))) < 1e-12);
    }
    const SpectralDecomposition k3 = solve(FamilyKind::KgCosEven, 1, 3.0);
    CHECK(k3.etas[0] == doctest::Approx(2.0 - 2.0 * std::sqrt(10.0)).epsilon(1e-14));
}

TEST_CASE("a = 0 spectra are the squared basis frequencies") {
    for (FamilyKind kind : all_family_kinds) {
        for (int n = 1; n <= 25; ++n) {
            const SolutionFamily f = make_family(kind, n);
            std::vector<double> expected;
            for (double r : f.basis_frequencies()) expected.push_back(4.0 * r * r);
            std::sort(expected.begin(), expected.end());
            const SpectralDecomposition d = solve(kind, n, 0.0);
            for (int i = 0; i < d.dim(); ++i) CHECK(std::abs(d.etas[i] - expected[i]) <= 1e-12);
        }
    }
}

TEST_CASE("symmetrize") {
    const inceop::TridiagonalOperator diag_op =
        inceop::build_operator(make_family(FamilyKind::KgCosEven, 4), 0.0);
    const Symmetrized s0 = symmetrize(diag_op);
    CHECK(s0.matrix.diag == diag_op.diag);
    for (double v : s0.matrix.off) CHECK(v == 0.0);
    for (double v : s0.scale) CHECK(v == 1.0);

    const Symmetrized s1 = symmetrize(inceop::build_dirac_operator(1, 3.0, +1));
    CHECK(s1.scale[0] == 1.0);
    CHECK(s1.scale[1] == doctest::Approx(1.0).epsilon(1e-15));

    // Defining property on every shipped operator: S = D T D^-1.
    for (FamilyKind kind : all_family_kinds) {
        for (int n : {1, 5, 13, 25}) {
            for (double a : {0.5, 5.0, 20.0}) {
                const inceop::TridiagonalOperator op = inceop::build_operator(make_family(kind, n), a);
                const Symmetrized s = symmetrize(op);
                CHECK(s.scale[0] == 1.0);
                for (int i = 0; i + 1 < op.dim(); ++i) {
                    const double upper = s.scale[i] * op.super[i] / s.scale[i + 1];
                    const double lower = s.scale[i + 1] * op.sub[i] / s.scale[i];
                    const double ref = std::abs(s.matrix.off[i]);
                    CHECK(std::abs(upper - s.matrix.off[i]) <= 1e-13 * std::max(1.0, ref));
                    CHECK(std::abs(lower - s.matrix.off[i]) <= 1e-13 * std::max(1.0, ref));
                    CHECK(s.matrix.off[i] == doctest::Approx(std::sqrt(op.super[i] * op.sub[i])));
                }
            }
        }
    }
}

TEST_CASE("symmetrize rejects sign-indefinite couplings") {
    inceop::TridiagonalOperator bad = inceop::build_dirac_operator(2, 1.0, +1);
    bad.sub[1] = -bad.sub[1];
    CHECK_THROWS_AS(symmetrize(bad), StructuralError);
    bad.sub[1] = 0.0;
    CHECK_THROWS_AS(symmetrize(bad), StructuralError);
}

TEST_CASE("implicit QL against a dense symmetric solver") {
    std::mt19937_64 rng(0x11CE);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + trial;
        const SymmetricTridiagonal s = random_tridiagonal(rng, n);
        const SymmetricEigenpairs ql = implicit_ql(s);
        const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(dense(s));
        const double scale = 1.0 + ref.eigenvalues().cwiseAbs().maxCoeff();
        CHECK((ql.values - ref.eigenvalues()).cwiseAbs().maxCoeff() < 1e-12 * scale);
        const Eigen::MatrixXd m = dense(s);
        CHECK((m * ql.vectors - ql.vectors * ql.values.asDiagonal()).cwiseAbs().maxCoeff() <
              1e-12 * scale);
        CHECK((ql.vectors.transpose() * ql.vectors - Eigen::MatrixXd::Identity(n, n))
                  .cwiseAbs()
                  .maxCoeff() < 1e-12);
    }
}

TEST_CASE("Sturm bisection oracle") {
    SymmetricTridiagonal free;
    free.diag = {0.0, 4.0};
    free.off = {0.0};
    const std::vector<double> f = sturm_bisection_oracle(free, 1e-14);
    CHECK(std::abs(f[0]) < 1e-14);
    CHECK(std::abs(f[1] - 4.0) < 1e-14);

    const Symmetrized s = symmetrize(inceop::build_dirac_operator(1, 3.0, +1));
    const std::vector<double> d = sturm_bisection_oracle(s.matrix, 1e-13);
    CHECK(std::abs(d[0] - (2.0 - std::sqrt(13.0))) < 1e-13);
    CHECK(std::abs(d[1] - (2.0 + std::sqrt(13.0))) < 1e-13);

    CHECK(sturm_count(free, -1.0) == 0);
    CHECK(sturm_count(free, 1.0) == 1);
    CHECK(sturm_count(free, 5.0) == 2);

    CHECK_THROWS_AS(sturm_bisection_oracle(s.matrix, 1e-13, 3), ConvergenceError);
    CHECK_THROWS_AS(sturm_bisection_oracle(s.matrix, 0.0), DomainError);
}

TEST_CASE("solver and Sturm oracle agree on the grid") {
    double worst = 0.0;
    for (FamilyKind kind : all_family_kinds) {
        for (int n = 1; n <= 25; ++n) {
            for (double a : {0.5, 1.0, 5.0, 14.0, 20.0}) {
                const inceop::TridiagonalOperator op = inceop::build_operator(make_family(kind, n), a);
                const SpectralDecomposition d = solve_spectrum(op);
                const std::vector<double> o = sturm_bisection_oracle(symmetrize(op).matrix, 1e-12);
                REQUIRE(static_cast<int>(o.size()) == d.dim());
                for (int i = 0; i < d.dim(); ++i) worst = std::max(worst, std::abs(o[i] - d.etas[i]));
            }
        }
    }
    MESSAGE("worst solver/oracle discrepancy " << worst);
    CHECK(worst < 1e-10);
}

TEST_CASE("normalization, sign and labels") {
    for (FamilyKind kind : all_family_kinds) {
        const SpectralDecomposition d = solve(kind, 9, 5.0);
        CHECK(d.dim() == make_family(kind, 9).dimension());
        for (int j = 0; j < d.dim(); ++j) {
            const Eigen::VectorXd v = d.vectors.col(j);
            CHECK(std::abs(v.norm() - 1.0) < 1e-14);
            Eigen::Index largest;
            v.cwiseAbs().maxCoeff(&largest);
            CHECK(v[largest] > 0.0);
            CHECK(d.k_labels[j] == d.dim() - j);
            CHECK(d.column_of_label(d.k_labels[j]) == j);
        }
        for (int j = 0; j + 1 < d.dim(); ++j) CHECK(d.etas[j] <= d.etas[j + 1]);
    }
    const SpectralDecomposition d = solve(FamilyKind::DiracPlus, 2, 1.0);
    CHECK_THROWS_AS(d.column_of_label(0), DomainError);
    CHECK_THROWS_AS(d.column_of_label(5), DomainError);
}

TEST_CASE("eigenpairs of T") {
    for (FamilyKind kind : all_family_kinds) {
        for (int n : {1, 6, 17, 25}) {
            for (double a : {0.5, 5.0, 20.0}) {
                const inceop::TridiagonalOperator op = inceop::build_operator(make_family(kind, n), a);
                const SpectralDecomposition d = solve_spectrum(op);
                for (int j = 0; j < d.dim(); ++j) {
                    const Eigen::VectorXd v = d.vectors.col(j);
                    double worst = 0.0;
                    for (int i = 0; i < d.dim(); ++i) {
                        double tv = op.diag[i] * v[i];
                        if (i + 1 < d.dim()) tv += op.super[i] * v[i + 1];
                        if (i > 0) tv += op.sub[i - 1] * v[i - 1];
                        worst = std::max(worst, std::abs(tv - d.etas[j] * v[i]));
                    }
                    CHECK(worst < 1e-11 * (1.0 + std::abs(d.etas[j]) + a * d.dim()));
                }
            }
        }
    }
}

TEST_CASE("weighted orthogonality") {
    for (FamilyKind kind : all_family_kinds) {
        for (int n : {3, 12, 20, 25}) {
            for (double a : {0.5, 5.0, 14.0, 20.0}) {
                const SpectralDecomposition d = solve(kind, n, a);
                Eigen::MatrixXd w = d.scale.asDiagonal() * d.vectors;
                for (int j = 0; j < d.dim(); ++j) w.col(j).normalize();
                const Eigen::MatrixXd gram = w.transpose() * w;
                double worst = 0.0;
                for (int i = 0; i < d.dim(); ++i) {
                    for (int j = 0; j < d.dim(); ++j) {
                        if (i != j) worst = std::max(worst, std::abs(gram(i, j)));
                    }
                }
                INFO(family_name(kind), " n=", n, " a=", a);
                CHECK(worst < 1e-10);
            }
        }
    }
}

TEST_CASE("determinism") {
    const SpectralDecomposition a = solve(FamilyKind::DiracPlus, 20, 14.0);
    const SpectralDecomposition b = solve(FamilyKind::DiracPlus, 20, 14.0);
    CHECK(a.etas == b.etas);
    CHECK(a.vectors == b.vectors);
    CHECK(a.k_labels == b.k_labels);
}

TEST_CASE("Dirac(20, 14): count, realness and pairing") {
    const SpectralDecomposition d = solve(FamilyKind::DiracPlus, 20, 14.0);
    CHECK(d.dim() == 40);
    // The upper spectrum forms near-degenerate pairs far below any relative
    // gap threshold; the top eigenvalue 4 n^2 + a^2 / 4 is unpaired.
    CHECK(d.etas[39] == doctest::Approx(1600.0 + 49.0).epsilon(1e-3));
    CHECK(d.min_relative_gap() < distinct_gap_threshold);
    CHECK_FALSE(d.distinct());
    const std::vector<PairSplitting> pairs = pair_splittings(d);
    CHECK(pairs.size() == 19);
    CHECK(pairs.front().upper_k == 2);
    CHECK(pairs.front().relative_splitting < 1e-12);
    const SpectralDecomposition k = solve(FamilyKind::KgCosEven, 20, 14.0);
    CHECK(k.dim() == 21);
}

TEST_CASE("Dirac minus mirrors Dirac plus") {
    for (int n : {1, 4, 11}) {
        for (double a : {0.5, 5.0, 14.0}) {
            const SpectralDecomposition p = solve(FamilyKind::DiracPlus, n, a);
            const SpectralDecomposition m = solve(FamilyKind::DiracMinus, n, a);
            const double scale = 1.0 + p.etas.cwiseAbs().maxCoeff();
            CHECK((p.etas - m.etas).cwiseAbs().maxCoeff() < 1e-12 * scale);
            // f_minus = conj(f_plus): coefficient of exp(-i r xi) moves to -r.
            if (p.distinct()) {
                for (int j = 0; j < p.dim(); ++j) {
                    const Eigen::VectorXd reversed = p.vectors.col(j).reverse();
                    CHECK((reversed - m.vectors.col(j)).cwiseAbs().maxCoeff() < 1e-10);
                }
            }
        }
    }
}

}  // TEST_SUITE
