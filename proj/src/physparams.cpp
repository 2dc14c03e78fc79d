#include "incevolkov/physparams.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "incevolkov/errors.hpp"

namespace incevolkov::physparams {

namespace c = incevolkov::constants;

namespace {

double energy_to_angular_frequency(double energy_ev) {
    return energy_ev * c::electron_volt / c::hbar;
}

}  // namespace

double LaserInput::angular_frequency() const {
    return energy_to_angular_frequency(photon_energy_ev);
}

double LaserInput::wavenumber() const { return angular_frequency() / c::speed_of_light; }

double LaserInput::field_amplitude() const {
    return field_amplitude_from_intensity(intensity_w_cm2);
}

double LaserInput::vector_potential_amplitude() const {
    return field_amplitude() / wavenumber();
}

void LaserInput::validate() const {
    if (!(photon_energy_ev > 0.0) || !std::isfinite(photon_energy_ev)) {
        throw DomainError("photon energy must be positive, got " + std::to_string(photon_energy_ev));
    }
    if (!(intensity_w_cm2 >= 0.0) || !std::isfinite(intensity_w_cm2)) {
        throw DomainError("intensity must be non-negative, got " + std::to_string(intensity_w_cm2));
    }
}

PlasmaInput PlasmaInput::from_density(double electron_density_cm3) {
    if (!(electron_density_cm3 >= 0.0)) {
        throw DomainError("electron density must be non-negative");
    }
    const double n_e = electron_density_cm3 * c::per_cm3;
    const double omega_p = std::sqrt(n_e * c::elementary_charge * c::elementary_charge /
                                     (c::vacuum_permittivity * c::electron_mass));
    PlasmaInput plasma;
    plasma.plasma_energy_ev = c::hbar * omega_p / c::electron_volt;
    plasma.electron_density_cm3 = electron_density_cm3;
    return plasma;
}

double PlasmaInput::angular_frequency() const {
    return energy_to_angular_frequency(plasma_energy_ev);
}

double PlasmaInput::wavenumber() const { return angular_frequency() / c::speed_of_light; }

void PlasmaInput::validate() const {
    if (!(plasma_energy_ev >= 0.0) || !std::isfinite(plasma_energy_ev)) {
        throw DomainError("plasma energy must be non-negative, got " + std::to_string(plasma_energy_ev));
    }
    if (electron_density_cm3) {
        const double expected = from_density(*electron_density_cm3).plasma_energy_ev;
        if (std::abs(expected - plasma_energy_ev) > 1e-10 * std::abs(expected)) {
            throw DomainError("electron density " + std::to_string(*electron_density_cm3) +
                              " /cm^3 implies plasma energy " + std::to_string(expected) +
                              " eV, inconsistent with " + std::to_string(plasma_energy_ev) + " eV");
        }
    }
}

double field_amplitude_from_intensity(double intensity_w_cm2) {
    if (!(intensity_w_cm2 >= 0.0)) {
        throw DomainError("intensity must be non-negative, got " + std::to_string(intensity_w_cm2));
    }
    const double intensity = intensity_w_cm2 * c::watt_per_cm2;
    return std::sqrt(2.0 * intensity / (c::vacuum_permittivity * c::speed_of_light));
}

double refractive_index(double plasma_energy_ev, double photon_energy_ev) {
    if (!(photon_energy_ev > 0.0)) throw DomainError("photon energy must be positive");
    if (!(plasma_energy_ev >= 0.0)) throw DomainError("plasma energy must be non-negative");
    if (plasma_energy_ev >= photon_energy_ev) {
        throw OverdenseError("overdense plasma: the underdense condition hbar*omega_p < hbar*omega (" +
                             std::to_string(plasma_energy_ev) + " eV < " +
                             std::to_string(photon_energy_ev) + " eV) is violated");
    }
    const double ratio = plasma_energy_ev / photon_energy_ev;
    return std::sqrt((1.0 - ratio) * (1.0 + ratio));
}

double coupling_parameter_a(const LaserInput& laser, const PlasmaInput& plasma) {
    laser.validate();
    plasma.validate();
    refractive_index(plasma.plasma_energy_ev, laser.photon_energy_ev);
    if (!(plasma.plasma_energy_ev > 0.0)) {
        throw DomainError("coupling parameter needs a positive plasma energy");
    }
    const double field = laser.field_amplitude();
    return 4.0 * c::elementary_charge * field * c::speed_of_light /
           (c::hbar * laser.angular_frequency() * plasma.angular_frequency());
}

double intensity_parameter_mu0(const LaserInput& laser, double particle_mass_kg) {
    laser.validate();
    if (!(particle_mass_kg > 0.0)) throw DomainError("particle mass must be positive");
    return c::elementary_charge * laser.field_amplitude() /
           (particle_mass_kg * c::speed_of_light * laser.angular_frequency());
}

double a_over_mu0(const PlasmaInput& plasma, double particle_mass_kg) {
    if (!(particle_mass_kg > 0.0)) throw DomainError("particle mass must be positive");
    if (!(plasma.plasma_energy_ev > 0.0)) throw DomainError("plasma energy must be positive");
    const double rest_energy = particle_mass_kg * c::speed_of_light * c::speed_of_light;
    return 4.0 * rest_energy / (plasma.plasma_energy_ev * c::electron_volt);
}

DerivedQuantities derive(const LaserInput& laser, const PlasmaInput& plasma,
                         const Particle& particle) {
    DerivedQuantities out;
    out.a = coupling_parameter_a(laser, plasma);
    out.n_m = refractive_index(plasma.plasma_energy_ev, laser.photon_energy_ev);
    out.lambda = std::sqrt(1.0 - out.n_m * out.n_m);
    out.k_p = plasma.wavenumber();
    out.field_amplitude = laser.field_amplitude();
    out.vector_potential = laser.vector_potential_amplitude();
    out.mu0 = intensity_parameter_mu0(laser, particle.mass_kg);
    out.a_over_mu0 = a_over_mu0(plasma, particle.mass_kg);
    out.kappa = particle.mass_kg * c::speed_of_light / c::hbar;
    // |eps| A0 with eps = e / (hbar c); SI potential A0 / c = F0 / omega0.
    const double field_wavenumber =
        c::elementary_charge * out.field_amplitude / (c::hbar * laser.angular_frequency());
    out.kappa_star = std::hypot(out.kappa, field_wavenumber);
    const double k_y = out.n_m * laser.wavenumber();
    const DispersionPoint point = dispersion(k_y, plasma);
    out.v_ph = point.v_ph;
    out.v_gr = point.v_gr;
    return out;
}

DispersionPoint dispersion(double k_y, const PlasmaInput& plasma) {
    if (!(k_y >= 0.0)) throw DomainError("k_y must be non-negative");
    const double omega_p = plasma.angular_frequency();
    const double ck = c::speed_of_light * k_y;
    DispersionPoint point;
    point.omega = std::hypot(omega_p, ck);
    point.v_ph = k_y > 0.0 ? point.omega / k_y : std::numeric_limits<double>::infinity();
    point.v_gr = c::speed_of_light * ck / point.omega;
    return point;
}

double wavenumber_from(double omega, const PlasmaInput& plasma) {
    const double omega_p = plasma.angular_frequency();
    if (omega < omega_p) throw OverdenseError("frequency below the plasma cutoff has no real k_y");
    return std::sqrt((omega - omega_p) * (omega + omega_p)) / c::speed_of_light;
}

double quantized_transverse_momentum(FamilyKind kind, int n) {
    const SolutionFamily family = make_family(kind, n);
    return 0.5 * (family.q() + 1);
}

LongitudinalMomentum eta_to_longitudinal(double eta) {
    LongitudinalMomentum out;
    out.abs_eta = std::abs(eta);
    if (eta >= 0.0) {
        out.propagating = true;
        out.k_dot_p = 0.5 * std::sqrt(eta);
    } else {
        out.propagating = false;
        out.k_dot_p = 0.0;
    }
    return out;
}

double DeBroglieMomentum::mass_shell_defect(double kappa_star_sq) const {
    const std::complex<double> p_sq = p0 * p0 - px * px - py * py - pz * pz;
    return std::abs(p_sq - kappa_star_sq) / (kappa_star_sq + std::norm(p0) + 1.0);
}

WaveGeometry WaveGeometry::from_refractive_index(double n_m) {
    if (!(n_m > 0.0 && n_m < 1.0)) {
        throw DomainError("refractive index must lie in (0, 1), got " + std::to_string(n_m));
    }
    WaveGeometry g;
    g.n_m = n_m;
    g.lambda = std::sqrt((1.0 - n_m) * (1.0 + n_m));
    g.k0 = 1.0 / g.lambda;
    return g;
}

DeBroglieMomentum resolve_momentum(const SolutionFamily& family, double eta, double a,
                                   const WaveGeometry& geometry, double kappa,
                                   int charge_sign, int k_index) {
    if (charge_sign != 1 && charge_sign != -1) throw DomainError("charge_sign must be +1 or -1");
    if (!(a >= 0.0)) throw DomainError("a must be non-negative");
    DeBroglieMomentum p;
    p.eta = eta;
    p.q = family.q();
    p.n = family.n;
    p.k_index = k_index;

    const std::complex<double> k_dot_p = 0.5 * std::sqrt(std::complex<double>(eta, 0.0));
    const double px = charge_sign * 0.5 * (family.q() + 1);
    const double alpha = 0.25 * a;
    const double kappa_star_sq = kappa * kappa + alpha * alpha;
    const std::complex<double> t =
        std::sqrt((k_dot_p * k_dot_p - px * px - kappa_star_sq)) / geometry.lambda;

    p.k_dot_p = k_dot_p;
    p.p0 = k_dot_p * geometry.k0 + geometry.n_m * t;
    p.px = px;
    p.py = k_dot_p * geometry.k0 * geometry.n_m + t;
    p.pz = 0.0;
    return p;
}

}  // namespace incevolkov::physparams
