#pragma once

#include <complex>
#include <span>
#include <vector>

#include "incevolkov/eigensolve.hpp"

// Evaluation of the modulation functions
//   Psi_ps(xi) = f(xi) exp[-(a/4) cos xi]   (Dirac)
//   Phi_p(xi)  = w(xi) exp[-(a/4) cos xi]   (Klein-Gordon)
// and the figure data built from them.
namespace incevolkov::wavefn {

using Complex = std::complex<double>;

// Finite trigonometric sum for the family's basis:
//   Dirac sum_r c_r exp(-i r xi), cos families sum_r c_r cos(r xi),
//   sin families sum_r c_r sin(r xi).
// Throws DomainError when the coefficient count does not match the family.
Complex eval_polynomial_part(const SolutionFamily& family, std::span<const double> coefficients,
                             double xi);

class ModulationFunction {
public:
    // Column `column` of the decomposition (not the k label).
    ModulationFunction(const eigensolve::SpectralDecomposition& decomposition, int column);
    ModulationFunction(SolutionFamily family, double a, std::vector<double> coefficients,
                       double eta, int k_index = 0);

    Complex polynomial_part(double xi) const;
    double envelope(double xi) const;  // exp[-(a/4) cos xi]
    Complex value(double xi) const;

    const SolutionFamily& family() const { return family_; }
    double a() const { return a_; }
    double eta() const { return eta_; }
    int k_index() const { return k_index_; }
    const std::vector<double>& coefficients() const { return coefficients_; }

private:
    SolutionFamily family_;
    double a_{};
    std::vector<double> coefficients_;
    double eta_{};
    int k_index_{};
};

enum class Normalization { Raw, PeakOne, UnitIntegral };

// exp[-(a/2) cos xi]; divided by exp(a/2) for PeakOne. UnitIntegral divides
// by the closed-form integral 2 pi I0(a/2) over one period.
double envelope_density(double a, double xi, Normalization normalization);

struct Contrast {
    double amplitude{};  // max/min of exp[-(a/4) cos xi] = e^{a/2}
    double density{};    // max/min of its square = e^{a}
};
Contrast contrast(double a);

struct HarmonicStrength {
    int k{};
    double r{};
    double strength{};
};
// Squared coefficients, ordered by (k ascending, r ascending).
std::vector<HarmonicStrength> harmonic_strengths(const eigensolve::SpectralDecomposition& d);
// Fraction of the k-th mode's strength at r <= 0.
double strength_at_nonpositive_r(const eigensolve::SpectralDecomposition& d, int k);

struct DensityProfile {
    std::vector<double> xi;
    std::vector<double> values;
    Normalization normalization{Normalization::Raw};
};

// |value(xi)|^2 on an equidistant grid over [-pi, pi].
DensityProfile sample_density(const ModulationFunction& mod, int n_points,
                              Normalization normalization = Normalization::Raw);
// Envelope density on the same grid (figure-1 data).
DensityProfile sample_envelope(double a, int n_points, Normalization normalization);

}  // namespace incevolkov::wavefn
