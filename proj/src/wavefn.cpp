#include "incevolkov/wavefn.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "incevolkov/constants.hpp"
#include "incevolkov/errors.hpp"

namespace incevolkov::wavefn {

using constants::pi;

Complex eval_polynomial_part(const SolutionFamily& family, std::span<const double> coefficients,
                             double xi) {
    const std::vector<double> basis = family.basis_frequencies();
    if (coefficients.size() != basis.size()) {
        throw DomainError("expected " + std::to_string(basis.size()) + " coefficients for " +
                          std::string(family_name(family.kind)) + ", got " +
                          std::to_string(coefficients.size()));
    }
    if (is_dirac(family.kind)) {
        Complex sum{0.0, 0.0};
        for (std::size_t i = 0; i < basis.size(); ++i) {
            sum += coefficients[i] * std::polar(1.0, -basis[i] * xi);
        }
        return sum;
    }
    double sum = 0.0;
    const bool cosine = is_cosine(family.kind);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const double phase = basis[i] * xi;
        sum += coefficients[i] * (cosine ? std::cos(phase) : std::sin(phase));
    }
    return {sum, 0.0};
}

ModulationFunction::ModulationFunction(const eigensolve::SpectralDecomposition& decomposition,
                                       int column)
    : family_(decomposition.family), a_(decomposition.a) {
    if (column < 0 || column >= decomposition.dim()) {
        throw DomainError("eigenpair column out of range: " + std::to_string(column));
    }
    const Eigen::VectorXd v = decomposition.vectors.col(column);
    coefficients_.assign(v.data(), v.data() + v.size());
    eta_ = decomposition.etas[column];
    k_index_ = decomposition.k_labels[column];
}

ModulationFunction::ModulationFunction(SolutionFamily family, double a,
                                       std::vector<double> coefficients, double eta, int k_index)
    : family_(family), a_(a), coefficients_(std::move(coefficients)), eta_(eta), k_index_(k_index) {
    if (static_cast<int>(coefficients_.size()) != family_.dimension()) {
        throw DomainError("coefficient count does not match family dimension");
    }
}

Complex ModulationFunction::polynomial_part(double xi) const {
    return eval_polynomial_part(family_, coefficients_, xi);
}

double ModulationFunction::envelope(double xi) const { return std::exp(-0.25 * a_ * std::cos(xi)); }

Complex ModulationFunction::value(double xi) const { return polynomial_part(xi) * envelope(xi); }

double envelope_density(double a, double xi, Normalization normalization) {
    if (!(a >= 0.0)) throw DomainError("a must be non-negative");
    switch (normalization) {
        case Normalization::PeakOne:
            // exp[-(a/2)(1 + cos xi)] avoids overflow at large a.
            return std::exp(-0.5 * a * (1.0 + std::cos(xi)));
        case Normalization::UnitIntegral:
            // Scaled Bessel I0 keeps the ratio finite for large a.
            return std::exp(-0.5 * a * (1.0 + std::cos(xi))) /
                   (2.0 * pi * std::cyl_bessel_i(0.0, 0.5 * a) * std::exp(-0.5 * a));
        case Normalization::Raw:
            break;
    }
    return std::exp(-0.5 * a * std::cos(xi));
}

Contrast contrast(double a) {
    if (!(a >= 0.0)) throw DomainError("a must be non-negative");
    return {std::exp(0.5 * a), std::exp(a)};
}

std::vector<HarmonicStrength> harmonic_strengths(const eigensolve::SpectralDecomposition& d) {
    const std::vector<double> basis = d.family.basis_frequencies();
    std::vector<HarmonicStrength> table;
    table.reserve(static_cast<std::size_t>(d.dim()) * basis.size());
    for (int k = 1; k <= d.dim(); ++k) {
        const int column = d.column_of_label(k);
        for (int i = 0; i < d.dim(); ++i) {
            const double c = d.vectors(i, column);
            table.push_back({k, basis[i], c * c});
        }
    }
    return table;
}

double strength_at_nonpositive_r(const eigensolve::SpectralDecomposition& d, int k) {
    const std::vector<double> basis = d.family.basis_frequencies();
    const int column = d.column_of_label(k);
    double total = 0.0, nonpositive = 0.0;
    for (int i = 0; i < d.dim(); ++i) {
        const double s = d.vectors(i, column) * d.vectors(i, column);
        total += s;
        if (basis[i] <= 0.0) nonpositive += s;
    }
    return nonpositive / total;
}

namespace {

std::vector<double> phase_grid(int n_points) {
    if (n_points < 2) throw DomainError("need at least 2 sample points");
    std::vector<double> xi(n_points);
    // Integer numerator keeps the grid symmetric; odd counts hit xi = 0 exactly.
    const int span = n_points - 1;
    for (int i = 0; i < n_points; ++i) xi[i] = pi * (2 * i - span) / span;
    return xi;
}

void normalize(DensityProfile& profile) {
    if (profile.normalization == Normalization::PeakOne) {
        const double peak = *std::max_element(profile.values.begin(), profile.values.end());
        if (peak > 0.0) {
            for (double& v : profile.values) v /= peak;
        }
    } else if (profile.normalization == Normalization::UnitIntegral) {
        double integral = 0.0;
        for (std::size_t i = 0; i + 1 < profile.values.size(); ++i) {
            integral += 0.5 * (profile.values[i] + profile.values[i + 1]) *
                        (profile.xi[i + 1] - profile.xi[i]);
        }
        if (integral > 0.0) {
            for (double& v : profile.values) v /= integral;
        }
    }
}

}  // namespace

DensityProfile sample_density(const ModulationFunction& mod, int n_points,
                              Normalization normalization) {
    DensityProfile profile;
    profile.xi = phase_grid(n_points);
    profile.normalization = normalization;
    profile.values.reserve(profile.xi.size());
    for (double xi : profile.xi) profile.values.push_back(std::norm(mod.value(xi)));
    normalize(profile);
    return profile;
}

DensityProfile sample_envelope(double a, int n_points, Normalization normalization) {
    DensityProfile profile;
    profile.xi = phase_grid(n_points);
    profile.normalization = normalization;
    profile.values.reserve(profile.xi.size());
    for (double xi : profile.xi) profile.values.push_back(envelope_density(a, xi, normalization));
    return profile;
}

}  // namespace incevolkov::wavefn
