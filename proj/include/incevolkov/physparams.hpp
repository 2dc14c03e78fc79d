#pragma once

#include <complex>
#include <optional>

#include "incevolkov/constants.hpp"
#include "incevolkov/family.hpp"

// Laboratory inputs -> dimensionless parameters of the Ince-type problems,
// and quantum numbers / eigenvalues -> particle momenta.
//
// Physical quantities are SI unless a name says otherwise. Everything the
// spectral solvers see is dimensionless with hbar = c = 1 and k_p = 1.
namespace incevolkov::physparams {

struct LaserInput {
    double photon_energy_ev{1.563};
    double intensity_w_cm2{1.0e8};

    double angular_frequency() const;  // rad/s
    double wavenumber() const;         // vacuum k0 = omega0 / c, 1/m
    // Peak electric field of a linearly polarized wave, V/m.
    double field_amplitude() const;
    // A0 = F0 / k0 (Gaussian-style potential in V, so that A0 * k0 = F0).
    double vector_potential_amplitude() const;

    void validate() const;
};

struct PlasmaInput {
    double plasma_energy_ev{1.0};
    std::optional<double> electron_density_cm3;

    // omega_p^2 = n_e e^2 / (eps0 m_e).
    static PlasmaInput from_density(double electron_density_cm3);

    double angular_frequency() const;  // rad/s
    double wavenumber() const;         // k_p = omega_p / c, 1/m

    // Rejects non-positive energies and a density inconsistent with the
    // stated plasma energy (1e-10 relative).
    void validate() const;
};

struct Particle {
    double mass_kg{constants::electron_mass};

    static Particle electron() { return {constants::electron_mass}; }
    static Particle proton() { return {constants::proton_mass}; }
};

struct DerivedQuantities {
    double n_m{};         // refractive index
    double k_p{};         // plasma wavenumber, 1/m
    double lambda{};      // spin eigenvalue magnitude sqrt(1 - n_m^2)
    double a{};           // coupling parameter
    double kappa{};       // mc / hbar, 1/m
    double kappa_star{};  // dressed mass parameter, 1/m
    double mu0{};         // conventional intensity parameter
    double a_over_mu0{};  // 4 m c^2 / (hbar omega_p)
    double v_ph{};        // m/s
    double v_gr{};        // m/s
    double field_amplitude{};   // F0, V/m
    double vector_potential{};  // A0, V
};

double field_amplitude_from_intensity(double intensity_w_cm2);

// n_m = sqrt(1 - (omega_p/omega)^2). Throws OverdenseError unless
// 0 <= plasma_energy < photon_energy.
double refractive_index(double plasma_energy_ev, double photon_energy_ev);

// a = 4 e F0 c / (hbar omega0 omega_p). No mass enters.
double coupling_parameter_a(const LaserInput& laser, const PlasmaInput& plasma);

// mu0 = e F0 / (m c omega0).
double intensity_parameter_mu0(const LaserInput& laser, double particle_mass_kg);
double a_over_mu0(const PlasmaInput& plasma, double particle_mass_kg);

DerivedQuantities derive(const LaserInput& laser, const PlasmaInput& plasma,
                         const Particle& particle);

struct DispersionPoint {
    double omega{};  // rad/s
    double v_ph{};   // m/s; +inf at k_y = 0
    double v_gr{};   // m/s
};

// omega(k_y) = sqrt(omega_p^2 + (c k_y)^2) with phase and group velocity.
DispersionPoint dispersion(double k_y, const PlasmaInput& plasma);
// Inverse of dispersion: k_y = sqrt(omega^2 - omega_p^2) / c.
double wavenumber_from(double omega, const PlasmaInput& plasma);

// p_x / (hbar k_p) = (q + 1) / 2 for the terminating q of the family:
// n for Dirac, n + 1/2 for even-q KG, n + 1 for odd-q KG.
double quantized_transverse_momentum(FamilyKind kind, int n);

struct LongitudinalMomentum {
    bool propagating{true};
    double k_dot_p{};  // |k.p| / k_p^2 when propagating
    double abs_eta{};  // |eta|, recorded for the evanescent branch
};

// eta = 4 (k.p)^2 / k_p^4 -> |k.p| / k_p^2; eta < 0 is classified evanescent.
LongitudinalMomentum eta_to_longitudinal(double eta);

// Four-momentum of a resolved de Broglie state in units of hbar k_p.
//
// The wave vector is k = k0 (1, 0, n_m, 0) with k^2 = 1. The momentum is
// split p = (k.p) k + P with k.P = 0, P = (n_m t, p_x, t, p_z = 0); t follows
// from the dressed shell p^2 = kappa*^2 and is complex when the shell cannot
// be met with real components (evanescent transverse motion).
struct DeBroglieMomentum {
    std::complex<double> p0, px, py, pz;
    std::complex<double> k_dot_p;
    double eta{};
    int q{};
    int n{};
    int k_index{};

    // p^2 - kappa*^2 relative to kappa*^2 + |p0|^2.
    double mass_shell_defect(double kappa_star_sq) const;
};

// Geometry of the dimensionless problem: k = k0 (1, 0, n_m, 0), k^2 = 1.
struct WaveGeometry {
    double n_m{};
    double k0{};      // 1 / sqrt(1 - n_m^2)
    double lambda{};  // sqrt(1 - n_m^2)

    static WaveGeometry from_refractive_index(double n_m);
};

// Resolves the four-momentum for a (family, n, eta) state. `charge_sign` is
// the sign of the particle charge (-1 for electrons): p_x carries
// charge_sign * (q + 1) / 2. `kappa` is the bare mass in units of k_p.
DeBroglieMomentum resolve_momentum(const SolutionFamily& family, double eta, double a,
                                   const WaveGeometry& geometry, double kappa,
                                   int charge_sign, int k_index = 0);

}  // namespace incevolkov::physparams
