#include "incevolkov/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Eigenvalues>

#include "incevolkov/constants.hpp"
#include "incevolkov/errors.hpp"

namespace incevolkov::verify {

using constants::pi;

std::vector<double> default_z_samples(std::uint64_t seed) {
    std::vector<double> z;
    z.reserve(equidistant_samples + random_samples);
    for (int i = 0; i < equidistant_samples; ++i) z.push_back(2.0 * pi * i / equidistant_samples);
    SampleStream stream(seed);
    for (int i = 0; i < random_samples; ++i) z.push_back(2.0 * pi * stream.next());
    return z;
}

namespace {

// |LHS| of the family's ODE at z. Basis functions in z are exp(-2 i r z),
// cos(2 r z) or sin(2 r z); their derivatives are summed term by term.
template <typename Real>
Real ode_lhs(FamilyKind kind, const std::vector<double>& basis, std::span<const double> c,
             Real a, Real eta, Real q, Real z) {
    using Cplx = std::complex<Real>;
    const Real sin2z = std::sin(2 * z);
    const Real cos2z = std::cos(2 * z);
    const Real potential = eta - q * a * cos2z;
    if (is_dirac(kind)) {
        Cplx f{0}, df{0}, d2f{0};
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const Real r = basis[i];
            const Cplx e = std::polar(Real(1), -2 * r * z);
            const Real ci = c[i];
            f += ci * e;
            df += ci * Cplx(0, -2 * r) * e;
            d2f += ci * (-4 * r * r) * e;
        }
        const Real spin = kind == FamilyKind::DiracPlus ? Real(1) : Real(-1);
        const Cplx lhs = d2f + a * sin2z * (df + Cplx(0, spin) * f) + potential * f;
        return std::abs(lhs);
    }
    const bool cosine = is_cosine(kind);
    Real w{0}, dw{0}, d2w{0};
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Real r = basis[i];
        const Real phase = 2 * r * z;
        const Real s = std::sin(phase);
        const Real co = std::cos(phase);
        const Real ci = c[i];
        if (cosine) {
            w += ci * co;
            dw += -2 * r * ci * s;
            d2w += -4 * r * r * ci * co;
        } else {
            w += ci * s;
            dw += 2 * r * ci * co;
            d2w += -4 * r * r * ci * s;
        }
    }
    return std::abs(d2w + a * sin2z * dw + potential * w);
}

}  // namespace

ResidualReport ode_residual(const SolutionFamily& family, double a, double eta,
                            std::span<const double> coefficients, std::span<const double> z_samples,
                            Precision precision, int k_index) {
    const std::vector<double> basis = family.basis_frequencies();
    if (coefficients.size() != basis.size()) {
        throw DomainError("coefficient count does not match family dimension");
    }
    ResidualReport report;
    report.family = family;
    report.a = a;
    report.eta = eta;
    report.k_index = k_index;
    report.sample_count = static_cast<int>(z_samples.size());
    report.scale = 1.0 + std::abs(eta) + a * family.dimension();
    report.extended_precision = precision == Precision::Extended;
    double worst = 0.0;
    for (double z : z_samples) {
        double value;
        if (precision == Precision::Extended) {
            value = static_cast<double>(ode_lhs<long double>(family.kind, basis, coefficients, a, eta,
                                                             family.q(), z));
        } else {
            value = ode_lhs<double>(family.kind, basis, coefficients, a, eta, family.q(), z);
        }
        worst = std::max(worst, value);
    }
    report.max_residual = worst;
    report.pass = worst < report.tolerance * report.scale;
    return report;
}

ResidualReport check_eigenpair(const eigensolve::SpectralDecomposition& d, int column,
                               std::span<const double> z_samples, double eta_shift) {
    const Eigen::VectorXd v = d.vectors.col(column);
    const std::span<const double> coefficients(v.data(), static_cast<std::size_t>(v.size()));
    const double eta = d.etas[column] + eta_shift;
    const int k = d.k_labels[column];
    ResidualReport report = ode_residual(d.family, d.a, eta, coefficients, z_samples,
                                         Precision::Double, k);
    if (report.max_residual > 0.1 * report.tolerance * report.scale) {
        report = ode_residual(d.family, d.a, eta, coefficients, z_samples, Precision::Extended, k);
    }
    return report;
}

void attach_residuals(eigensolve::SpectralDecomposition& d, std::span<const double> z_samples) {
    d.residuals.assign(d.dim(), 0.0);
    for (int j = 0; j < d.dim(); ++j) d.residuals[j] = check_eigenpair(d, j, z_samples).max_residual;
}

namespace {

// Radix-2 diagonal balancing (Parlett-Reinsch), as done ahead of general
// dense eigensolvers. Eigen's EigenSolver does not balance on its own.
template <typename Matrix>
void balance(Matrix& m) {
    using Real = typename Matrix::Scalar;
    const int n = static_cast<int>(m.rows());
    constexpr double radix = 2.0;
    bool converged = false;
    while (!converged) {
        converged = true;
        for (int i = 0; i < n; ++i) {
            Real col = 0.0, row = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                col += std::abs(m(j, i));
                row += std::abs(m(i, j));
            }
            if (col == 0.0 || row == 0.0) continue;
            Real g = row / radix;
            Real f = 1.0;
            const Real s = col + row;
            while (col < g) {
                f *= radix;
                col *= radix * radix;
            }
            g = row * radix;
            while (col > g) {
                f /= radix;
                col /= radix * radix;
            }
            if ((col + row) / f < 0.95 * s) {
                converged = false;
                m.row(i) /= f;
                m.col(i) *= f;
            }
        }
    }
}

}  // namespace

DenseCrosscheck dense_oracle_crosscheck(const inceop::TridiagonalOperator& op) {
    const int n = op.dim();
    if (n > 200) throw DomainError("dense cross-check limited to dim <= 200");
    // Extended precision keeps the non-normal operators within tolerance.
    using DenseMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
    DenseMatrix dense = DenseMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) dense(i, i) = op.diag[i];
    for (int i = 0; i + 1 < n; ++i) {
        dense(i, i + 1) = op.super[i];
        dense(i + 1, i) = op.sub[i];
    }
    balance(dense);
    Eigen::EigenSolver<DenseMatrix> solver(dense, false);
    if (solver.info() != Eigen::Success) throw StructuralError("dense eigensolver failed");

    DenseCrosscheck out;
    std::vector<double> real_parts(n);
    for (int i = 0; i < n; ++i) {
        const std::complex<long double> ev = solver.eigenvalues()[i];
        out.max_imag = std::max(out.max_imag, static_cast<double>(std::abs(ev.imag())));
        real_parts[i] = static_cast<double>(ev.real());
    }
    if (out.max_imag > dense_imag_tolerance) {
        throw StructuralError("dense spectrum of " + std::string(family_name(op.family.kind)) +
                              " n=" + std::to_string(op.family.n) + " a=" + std::to_string(op.a) +
                              " has imaginary parts up to " + std::to_string(out.max_imag));
    }
    std::sort(real_parts.begin(), real_parts.end());
    const eigensolve::SpectralDecomposition d = eigensolve::solve_spectrum(op);
    for (int i = 0; i < n; ++i) {
        out.max_discrepancy = std::max(out.max_discrepancy, std::abs(real_parts[i] - d.etas[i]));
    }
    return out;
}

double sturm_crosscheck(const inceop::TridiagonalOperator& op) {
    const eigensolve::Symmetrized sym = eigensolve::symmetrize(op);
    const std::vector<double> oracle = eigensolve::sturm_bisection_oracle(sym.matrix, 1e-12);
    const eigensolve::SpectralDecomposition d = eigensolve::solve_spectrum(op);
    double worst = 0.0;
    for (int i = 0; i < d.dim(); ++i) worst = std::max(worst, std::abs(oracle[i] - d.etas[i]));
    return worst;
}

namespace {

// Sign of lambda_s paired with each Dirac family: the spin term
// -i eps F0 chi' lambda_s reduces to the +-i a sin2z f term of the Ince-type
// equation only when sign(lambda_s) = -charge_sign (DiracPlus) or
// +charge_sign (DiracMinus).
int spin_sign(FamilyKind kind, int charge_sign) {
    return kind == FamilyKind::DiracPlus ? -charge_sign : charge_sign;
}

}  // namespace

double pde_residual_at(const wavefn::ModulationFunction& mod,
                       const physparams::DeBroglieMomentum& momentum,
                       const physparams::WaveGeometry& geometry, const PdeSettings& settings,
                       double step) {
    using Cplx = std::complex<double>;
    const SolutionFamily& family = mod.family();
    const double a = mod.a();
    const double alpha = settings.charge_sign * 0.25 * a;  // eps A0 / k_p
    const double kappa_sq = settings.kappa * settings.kappa;

    if (momentum.q != family.q()) throw DomainError("momentum q does not match the family");
    const double quantized = settings.charge_sign * 0.5 * (family.q() + 1);
    if (std::abs(momentum.px - quantized) > 1e-12 * (1.0 + std::abs(quantized))) {
        throw DomainError("p_x is not the quantized value for this family");
    }
    if (momentum.mass_shell_defect(kappa_sq + alpha * alpha) > 1e-10) {
        throw DomainError("momentum is off the dressed mass shell p^2 = kappa*^2");
    }
    if (!(step > 0.0)) throw DomainError("finite-difference step must be positive");

    const Cplx k_dot_p = momentum.k_dot_p;
    const Cplx big_p0 = momentum.p0 - k_dot_p * geometry.k0;
    const Cplx big_px = momentum.px;
    const Cplx big_py = momentum.py - k_dot_p * geometry.k0 * geometry.n_m;
    const Cplx big_p_sq = big_p0 * big_p0 - big_px * big_px - big_py * big_py;
    const bool dirac = is_dirac(family.kind);
    const double lambda_sign = dirac ? spin_sign(family.kind, settings.charge_sign) : 0.0;

    auto phase = [&](double t, double y) { return geometry.k0 * (t - geometry.n_m * y); };
    auto field = [&](double t, double /*x*/, double y) { return mod.value(phase(t, y)); };
    auto potential = [&](double t, double /*x*/, double y) { return alpha * std::cos(phase(t, y)); };

    const double h = step;
    const Cplx I{0.0, 1.0};
    SampleStream stream(settings.seed);
    double worst = 0.0;
    for (int i = 0; i < settings.points; ++i) {
        const double t = stream.next() * 2.0 * pi / geometry.k0;
        const double x = stream.next();
        const double y = stream.next();

        const Cplx m0 = field(t, x, y);
        const Cplx mt_p = field(t + h, x, y), mt_m = field(t - h, x, y);
        const Cplx mx_p = field(t, x + h, y), mx_m = field(t, x - h, y);
        const Cplx my_p = field(t, x, y + h), my_m = field(t, x, y - h);

        const Cplx dt = (mt_p - mt_m) / (2 * h);
        const Cplx dx = (mx_p - mx_m) / (2 * h);
        const Cplx dy = (my_p - my_m) / (2 * h);
        const Cplx dtt = (mt_p - 2.0 * m0 + mt_m) / (h * h);
        const Cplx dxx = (mx_p - 2.0 * m0 + mx_m) / (h * h);
        const Cplx dyy = (my_p - 2.0 * m0 + my_m) / (h * h);

        const double ax = potential(t, x, y);
        const Cplx d_ax_m = (potential(t, x + h, y) * mx_p - potential(t, x - h, y) * mx_m) / (2 * h);

        // e^{iP.x} Pi^2 (M e^{-iP.x}) = (P + i d - eps A)^2 M, metric (+,-,-,-).
        Cplx residual = big_p_sq * m0 + 2.0 * I * (big_p0 * dt + big_px * dx + big_py * dy) +
                        2.0 * big_px * ax * m0 - (dtt - dxx - dyy) - I * (d_ax_m + ax * dx) -
                        ax * ax * m0 - kappa_sq * m0;
        if (dirac) {
            // -i eps F0 chi'(xi) lambda_s with chi' = -sin xi and k0 lambda = k_p = 1.
            residual += I * alpha * lambda_sign * std::sin(phase(t, y)) * m0;
        }
        worst = std::max(worst, std::abs(residual));
    }
    return worst;
}

PdeReport pde_residual_fd(const wavefn::ModulationFunction& mod,
                          const physparams::DeBroglieMomentum& momentum,
                          const physparams::WaveGeometry& geometry, const PdeSettings& settings) {
    PdeReport report;
    report.residual_h = pde_residual_at(mod, momentum, geometry, settings, settings.step);
    report.residual_half_h = pde_residual_at(mod, momentum, geometry, settings, 0.5 * settings.step);

    SampleStream stream(settings.seed);
    for (int i = 0; i < settings.points; ++i) {
        const double t = stream.next() * 2.0 * pi / geometry.k0;
        stream.next();
        const double y = stream.next();
        report.field_scale =
            std::max(report.field_scale, std::abs(mod.value(geometry.k0 * (t - geometry.n_m * y))));
    }
    const double rounding = 1e-10 * std::max(1.0, report.field_scale);
    report.exact = report.residual_h < rounding && report.residual_half_h < rounding;
    report.order = report.residual_half_h > 0.0
                       ? std::log2(report.residual_h / report.residual_half_h)
                       : 0.0;
    report.converges =
        report.exact || std::abs(report.order - pde_order_target) <= pde_order_tolerance;
    return report;
}

PdeReport pde_check_eigenpair(const eigensolve::SpectralDecomposition& d, int column,
                              const physparams::WaveGeometry& geometry, const PdeSettings& settings,
                              double eta_shift) {
    const wavefn::ModulationFunction mod(d, column);
    const physparams::DeBroglieMomentum momentum =
        physparams::resolve_momentum(d.family, d.etas[column] + eta_shift, d.a, geometry,
                                     settings.kappa, settings.charge_sign, d.k_labels[column]);
    return pde_residual_fd(mod, momentum, geometry, settings);
}

GridPointReport verify_point(const SolutionFamily& family, double a,
                             std::span<const double> z_samples, double eta_corruption) {
    const inceop::TridiagonalOperator op = inceop::build_operator(family, a);
    const eigensolve::SpectralDecomposition d = eigensolve::solve_spectrum(op);
    GridPointReport report;
    report.family = family;
    report.a = a;
    report.dim = d.dim();
    report.min_relative_gap = d.min_relative_gap();
    bool ode_ok = true;
    for (int j = 0; j < d.dim(); ++j) {
        ResidualReport pair = check_eigenpair(d, j, z_samples, eta_corruption);
        const double ratio = pair.max_residual / pair.scale;
        if (ratio >= report.worst_ode_ratio) {
            report.worst_ode_ratio = ratio;
            report.worst_k = pair.k_index;
        }
        report.extended_precision_used |= pair.extended_precision;
        if (!pair.pass) {
            ode_ok = false;
            report.failing_k.push_back(pair.k_index);
        }
        report.pairs.push_back(std::move(pair));
    }
    std::sort(report.failing_k.begin(), report.failing_k.end());
    report.sturm_discrepancy = sturm_crosscheck(op);
    const DenseCrosscheck dense = dense_oracle_crosscheck(op);
    report.dense_discrepancy = dense.max_discrepancy;
    report.dense_max_imag = dense.max_imag;
    report.pass = ode_ok && report.sturm_discrepancy < oracle_tolerance &&
                  report.dense_discrepancy < oracle_tolerance;
    return report;
}

std::vector<PdeCheckReport> verify_pde(const SolutionFamily& family, double a,
                                       const VerificationOptions& options) {
    const physparams::WaveGeometry geometry =
        physparams::WaveGeometry::from_refractive_index(options.n_m);
    const eigensolve::SpectralDecomposition d =
        eigensolve::solve_spectrum(inceop::build_operator(family, a));
    PdeSettings settings = options.pde;
    settings.seed = options.seed;
    std::vector<PdeCheckReport> out;
    for (int k = 1; k <= d.dim(); ++k) {
        const int column = d.column_of_label(k);
        PdeCheckReport check;
        check.family = family;
        check.a = a;
        check.k_index = k;
        check.eta = d.etas[column] + options.eta_corruption;
        check.report = pde_check_eigenpair(d, column, geometry, settings, options.eta_corruption);
        check.pass = check.report.converges;
        out.push_back(check);
    }
    return out;
}

std::vector<double> default_a_values() { return {0.0, 0.5, 1.0, 5.0, 14.0, 20.0}; }

VerificationReport verify_grid(int max_n, std::span<const double> a_values,
                               const VerificationOptions& options) {
    if (max_n < 1) throw DomainError("max_n must be >= 1");
    const std::vector<double> z = default_z_samples(options.seed);
    VerificationReport report;
    report.pass = true;
    for (FamilyKind kind : all_family_kinds) {
        for (int n = 1; n <= max_n; ++n) {
            for (double a : a_values) {
                GridPointReport point = verify_point(make_family(kind, n), a, z, options.eta_corruption);
                report.pass = report.pass && point.pass;
                report.grid.push_back(std::move(point));
            }
        }
    }
    if (options.include_pde) {
        for (FamilyKind kind :
             {FamilyKind::KgCosEven, FamilyKind::DiracPlus, FamilyKind::DiracMinus}) {
            for (PdeCheckReport& check : verify_pde(make_family(kind, 2), 5.0, options)) {
                report.pass = report.pass && check.pass;
                report.pde.push_back(std::move(check));
            }
        }
    }
    return report;
}

}  // namespace incevolkov::verify
