#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "incevolkov/eigensolve.hpp"
#include "incevolkov/errors.hpp"
#include "incevolkov/inceop.hpp"
#include "incevolkov/physparams.hpp"
#include "incevolkov/verify.hpp"
#include "incevolkov/wavefn.hpp"

namespace incevolkov::cli {

using Json = nlohmann::ordered_json;

namespace {

// Figure presets when the config carries no explicit a.
constexpr double figure_a = 14.0;
constexpr double figure1_a_values[] = {14.0, 20.0};
constexpr int figure1_points = 721;

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json document(std::string_view command) {
    Json doc;
    doc["schema"] = schema_version;
    doc["command"] = command;
    return doc;
}

std::string csv_line(std::initializer_list<std::string> cells) {
    std::string line;
    bool first = true;
    for (const std::string& cell : cells) {
        if (!first) line += ',';
        first = false;
        if (cell.find_first_of(",\"") == std::string::npos) {
            line += cell;
            continue;
        }
        line += '"';
        for (char ch : cell) line += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        line += '"';
    }
    return line + "\n";
}

SolutionFamily configured_family(const RunConfig& config) {
    return make_family(parse_family(config.family), config.n);
}

eigensolve::SpectralDecomposition solved(const SolutionFamily& family, double a,
                                         std::uint64_t seed) {
    eigensolve::SpectralDecomposition d =
        eigensolve::solve_spectrum(inceop::build_operator(family, a));
    verify::attach_residuals(d, verify::default_z_samples(seed));
    return d;
}

std::vector<int> selected_labels(const RunConfig& config, int dim) {
    std::vector<int> labels = config.k_select;
    if (labels.empty()) {
        for (int k = 1; k <= dim; ++k) labels.push_back(k);
    }
    for (int k : labels) {
        if (k > dim) {
            throw DomainError("k = " + std::to_string(k) + " exceeds the spectrum size " +
                              std::to_string(dim));
        }
    }
    return labels;
}

std::string regime(const physparams::LongitudinalMomentum& m) {
    return m.propagating ? "propagating" : "evanescent";
}

double residual_limit(const eigensolve::SpectralDecomposition& d, int column) {
    return verify::ode_tolerance * (1.0 + std::abs(d.etas[column]) + d.a * d.dim());
}

std::string count_note(const SolutionFamily& family) {
    std::ostringstream note;
    note << family_name(family.kind) << " n=" << family.n << " has " << family.dimension()
         << " modes over " << family.basis_description();
    if (family.kind == FamilyKind::KgCosEven) note << " (the constant r = 0 term is included)";
    return note.str();
}

// Exact a = 0 spectrum {4 r^2} check for a decomposition.
bool matches_free_spectrum(const eigensolve::SpectralDecomposition& d) {
    std::vector<double> free;
    for (double r : d.family.basis_frequencies()) free.push_back(4.0 * r * r);
    std::sort(free.begin(), free.end());
    for (int i = 0; i < d.dim(); ++i) {
        if (std::abs(free[i] - d.etas[i]) > 1e-12) return false;
    }
    return true;
}

Json spectrum_json(const eigensolve::SpectralDecomposition& d) {
    Json out;
    out["family"] = family_name(d.family.kind);
    out["n"] = d.family.n;
    out["q"] = d.family.q();
    out["a"] = d.a;
    out["p_x"] = physparams::quantized_transverse_momentum(d.family.kind, d.family.n);
    out["basis"] = d.family.basis_frequencies();
    Json etas = Json::array(), vectors = Json::array(), residuals = Json::array(),
         limits = Json::array(), labels = Json::array(), longitudinal = Json::array();
    // Ascending eta; k_labels runs down from dim because k = 1 is the top.
    for (int j = 0; j < d.dim(); ++j) {
        const int k = d.k_labels[j];
        etas.push_back(d.etas[j]);
        Json column = Json::array();
        for (int i = 0; i < d.dim(); ++i) column.push_back(d.vectors(i, j));
        vectors.push_back(std::move(column));
        residuals.push_back(d.residuals.empty() ? 0.0 : d.residuals[j]);
        limits.push_back(residual_limit(d, j));
        labels.push_back(k);
        const physparams::LongitudinalMomentum m = physparams::eta_to_longitudinal(d.etas[j]);
        longitudinal.push_back(
            {{"k_dot_p", m.k_dot_p}, {"abs_eta", m.abs_eta}, {"regime", regime(m)}});
    }
    out["etas"] = std::move(etas);
    out["vectors"] = std::move(vectors);
    out["residuals"] = std::move(residuals);
    out["residual_limits"] = std::move(limits);
    out["k_labels"] = std::move(labels);
    out["longitudinal"] = std::move(longitudinal);
    return out;
}

}  // namespace

std::string format_real(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

std::string cmd_params(const RunConfig& config) {
    config.laser.validate();
    config.plasma.validate();
    const physparams::Particle particle = config.particle_model();
    const physparams::DerivedQuantities q = physparams::derive(config.laser, config.plasma, particle);
    const wavefn::Contrast contrast = wavefn::contrast(q.a);

    struct Row {
        const char* name;
        double value;
        const char* unit;
        const char* definition;
    };
    const Row rows[] = {
        {"n_m", q.n_m, "1", "sqrt(1 - (omega_p/omega0)^2)"},
        {"k_p", q.k_p, "1/m", "omega_p / c"},
        {"lambda", q.lambda, "1", "sqrt(1 - n_m^2), spin eigenvalue magnitude"},
        {"a", q.a, "1", "4 e F0 c / (hbar omega0 omega_p)"},
        {"mu0", q.mu0, "1", "e F0 / (m c omega0)"},
        {"a_over_mu0", q.a_over_mu0, "1", "4 m c^2 / (hbar omega_p)"},
        {"kappa", q.kappa, "1/m", "m c / hbar"},
        {"kappa_star", q.kappa_star, "1/m", "sqrt(kappa^2 + (e A0 / hbar c)^2)"},
        {"v_ph", q.v_ph, "m/s", "omega / k_y on the plasma dispersion branch"},
        {"v_gr", q.v_gr, "m/s", "d omega / d k_y = c^2 k_y / omega"},
        {"field_amplitude", q.field_amplitude, "V/m", "F0 = sqrt(2 I / (eps0 c))"},
        {"vector_potential", q.vector_potential, "V", "A0 = F0 / k0"},
        {"amplitude_contrast", contrast.amplitude, "1", "e^(a/2)"},
        {"density_contrast", contrast.density, "1", "e^a"},
    };

    char note[96];
    std::snprintf(note, sizeof note, "a = %.4g rounds to %.0f", q.a, std::round(q.a));

    if (config.format == OutputFormat::Csv) {
        std::string out = "# ince-volkov params, particle=" + config.particle + "\n";
        out += "# " + std::string(note) + "\n";
        out += csv_line({"quantity", "value", "unit", "definition"});
        for (const Row& r : rows) out += csv_line({r.name, format_real(r.value), r.unit, r.definition});
        return out;
    }
    Json doc = document("params");
    Json inputs;
    inputs["photon_energy_ev"] = config.laser.photon_energy_ev;
    inputs["intensity_w_cm2"] = config.laser.intensity_w_cm2;
    inputs["plasma_energy_ev"] = config.plasma.plasma_energy_ev;
    if (config.plasma.electron_density_cm3) {
        inputs["electron_density_cm3"] = *config.plasma.electron_density_cm3;
    }
    inputs["particle"] = config.particle;
    inputs["particle_mass_kg"] = particle.mass_kg;
    doc["inputs"] = std::move(inputs);
    Json quantities;
    for (const Row& r : rows) {
        quantities[r.name] = {{"value", r.value}, {"unit", r.unit}, {"definition", r.definition}};
    }
    doc["quantities"] = std::move(quantities);
    doc["notes"] = Json::array({note});
    return dump(doc);
}

std::string cmd_spectrum(const RunConfig& config) {
    const SolutionFamily family = configured_family(config);
    const eigensolve::SpectralDecomposition d = solved(family, config.coupling(), config.seed);

    if (config.format == OutputFormat::Csv) {
        std::string out = "# ince-volkov spectrum family=" + std::string(family_name(family.kind)) +
                          " n=" + std::to_string(family.n) + " q=" + std::to_string(family.q()) +
                          " a=" + format_real(d.a) + "\n";
        out += "# " + count_note(family) + "\n";
        out += "# rows by ascending eta; k = 1 is the largest eta; eta = 4 (k.p)^2 / k_p^4\n";
        out += "# residual = max_z |ODE LHS| over the seeded z samples, limit = 1e-9 (1 + |eta| + a dim)\n";
        out += "# k_dot_p = |k.p| / k_p^2 = sqrt(eta)/2 for eta >= 0, empty when evanescent\n";
        out += csv_line({"k", "eta", "residual", "residual_limit", "k_dot_p", "regime"});
        for (int j = 0; j < d.dim(); ++j) {
            const int k = d.k_labels[j];
            const physparams::LongitudinalMomentum m = physparams::eta_to_longitudinal(d.etas[j]);
            out += csv_line({std::to_string(k), format_real(d.etas[j]), format_real(d.residuals[j]),
                             format_real(residual_limit(d, j)),
                             m.propagating ? format_real(m.k_dot_p) : std::string(), regime(m)});
        }
        return out;
    }
    Json doc = document("spectrum");
    const Json body = spectrum_json(d);
    for (const auto& [key, value] : body.items()) doc[key] = value;
    doc["notes"] = Json::array({count_note(family)});
    return dump(doc);
}

std::string cmd_modes(const RunConfig& config) {
    const SolutionFamily family = configured_family(config);
    const eigensolve::SpectralDecomposition d = solved(family, config.coupling(), config.seed);
    const std::vector<int> labels = selected_labels(config, d.dim());
    const std::vector<double> basis = family.basis_frequencies();

    if (config.format == OutputFormat::Csv) {
        std::string out = "# ince-volkov modes family=" + std::string(family_name(family.kind)) +
                          " n=" + std::to_string(family.n) + " a=" + format_real(d.a) + "\n";
        out += "# density = |modulation(xi)|^2 / max over the grid; modulation = "
               "trig polynomial * exp(-(a/4) cos xi)\n";
        out += csv_line({"k", "eta", "xi", "re", "im", "density"});
        for (int k : labels) {
            const int j = d.column_of_label(k);
            const wavefn::ModulationFunction mod(d, j);
            const wavefn::DensityProfile density =
                wavefn::sample_density(mod, config.modes_points, wavefn::Normalization::PeakOne);
            for (std::size_t i = 0; i < density.xi.size(); ++i) {
                const wavefn::Complex v = mod.value(density.xi[i]);
                out += csv_line({std::to_string(k), format_real(d.etas[j]), format_real(density.xi[i]),
                                 format_real(v.real()), format_real(v.imag()),
                                 format_real(density.values[i])});
            }
        }
        return out;
    }
    Json doc = document("modes");
    doc["family"] = family_name(family.kind);
    doc["n"] = family.n;
    doc["q"] = family.q();
    doc["a"] = d.a;
    doc["basis"] = basis;
    Json modes = Json::array();
    Json grid;
    for (int k : labels) {
        const int j = d.column_of_label(k);
        const wavefn::ModulationFunction mod(d, j);
        const wavefn::DensityProfile density =
            wavefn::sample_density(mod, config.modes_points, wavefn::Normalization::PeakOne);
        if (grid.is_null()) grid = density.xi;
        const physparams::LongitudinalMomentum m = physparams::eta_to_longitudinal(d.etas[j]);
        Json mode;
        mode["k"] = k;
        mode["eta"] = d.etas[j];
        mode["coefficients"] = mod.coefficients();
        mode["residual"] = d.residuals[j];
        mode["k_dot_p"] = m.k_dot_p;
        mode["regime"] = regime(m);
        mode["density"] = density.values;
        modes.push_back(std::move(mode));
    }
    doc["xi"] = std::move(grid);
    doc["modes"] = std::move(modes);
    return dump(doc);
}

namespace {

std::string figure1(const RunConfig& config) {
    std::vector<double> a_values(std::begin(figure1_a_values), std::end(figure1_a_values));
    if (config.a_override) a_values = {*config.a_override};
    std::vector<wavefn::DensityProfile> profiles;
    for (double a : a_values) {
        profiles.push_back(
            wavefn::sample_envelope(a, figure1_points, wavefn::Normalization::PeakOne));
    }
    if (config.format == OutputFormat::Csv) {
        std::string out = "# ince-volkov figure 1: envelope density exp(-(a/2)(1 + cos xi)), peak 1\n";
        for (double a : a_values) {
            const wavefn::Contrast c = wavefn::contrast(a);
            out += "# a=" + format_real(a) + " amplitude_contrast=e^(a/2)=" + format_real(c.amplitude) +
                   " density_contrast=e^a=" + format_real(c.density) + "\n";
        }
        std::string header = "xi";
        for (double a : a_values) header += ",density_a" + format_real(a);
        out += header + "\n";
        for (int i = 0; i < figure1_points; ++i) {
            std::string line = format_real(profiles[0].xi[i]);
            for (const auto& p : profiles) line += "," + format_real(p.values[i]);
            out += line + "\n";
        }
        return out;
    }
    Json doc = document("figure");
    doc["figure"] = 1;
    doc["xi"] = profiles[0].xi;
    Json series = Json::array();
    for (std::size_t i = 0; i < a_values.size(); ++i) {
        const wavefn::Contrast c = wavefn::contrast(a_values[i]);
        series.push_back({{"a", a_values[i]},
                          {"amplitude_contrast", c.amplitude},
                          {"density_contrast", c.density},
                          {"density", profiles[i].values}});
    }
    doc["series"] = std::move(series);
    return dump(doc);
}

struct FigurePair {
    eigensolve::SpectralDecomposition dirac;
    eigensolve::SpectralDecomposition kg;
};

FigurePair figure_spectra(const RunConfig& config) {
    const double a = config.a_override.value_or(figure_a);
    return {solved(make_family(FamilyKind::DiracPlus, config.n), a, config.seed),
            solved(make_family(FamilyKind::KgCosEven, config.n), a, config.seed)};
}

std::string figure2(const RunConfig& config) {
    const FigurePair f = figure_spectra(config);
    const std::vector<eigensolve::PairSplitting> pairs = eigensolve::pair_splittings(f.dirac);
    if (config.format == OutputFormat::Csv) {
        std::string out = "# ince-volkov figure 2: spectra at n=" + std::to_string(config.n) +
                          " a=" + format_real(f.dirac.a) + "\n";
        out += "# " + count_note(f.dirac.family) + "\n# " + count_note(f.kg.family) + "\n";
        out += "# p_x in units of hbar k_p; k_dot_p = sqrt(eta)/2, empty when evanescent\n";
        double worst = 0.0;
        for (const auto& p : pairs) worst = std::max(worst, p.relative_splitting);
        out += "# dirac pairing: " + std::to_string(pairs.size()) +
               " pairs, max splitting / neighbour spacing = " + format_real(worst) + "\n";
        out += csv_line({"particle", "family", "k", "eta", "p_x", "k_dot_p", "regime"});
        for (const auto* d : {&f.dirac, &f.kg}) {
            const std::string particle = is_dirac(d->family.kind) ? "dirac" : "klein-gordon";
            const double px =
                physparams::quantized_transverse_momentum(d->family.kind, d->family.n);
            for (int j = 0; j < d->dim(); ++j) {
                const int k = d->k_labels[j];
                const auto m = physparams::eta_to_longitudinal(d->etas[j]);
                out += csv_line({particle, std::string(family_name(d->family.kind)), std::to_string(k),
                                 format_real(d->etas[j]), format_real(px),
                                 m.propagating ? format_real(m.k_dot_p) : std::string(), regime(m)});
            }
        }
        return out;
    }
    Json doc = document("figure");
    doc["figure"] = 2;
    doc["dirac"] = spectrum_json(f.dirac);
    doc["klein_gordon"] = spectrum_json(f.kg);
    Json pairing = Json::array();
    for (const auto& p : pairs) {
        pairing.push_back({{"upper_k", p.upper_k},
                           {"eta_low", p.eta_low},
                           {"eta_high", p.eta_high},
                           {"splitting", p.splitting},
                           {"relative_splitting", p.relative_splitting}});
    }
    doc["dirac_pairing"] = std::move(pairing);
    return dump(doc);
}

std::string figure3(const RunConfig& config) {
    const FigurePair f = figure_spectra(config);
    if (config.format == OutputFormat::Csv) {
        std::string out = "# ince-volkov figure 3: harmonic strengths |c_r|^2 per mode, n=" +
                          std::to_string(config.n) + " a=" + format_real(f.dirac.a) + "\n";
        out += "# each k-slice sums to 1; k = 1 is the largest eta\n";
        out += csv_line({"particle", "family", "k", "r", "strength"});
        for (const auto* d : {&f.dirac, &f.kg}) {
            const std::string particle = is_dirac(d->family.kind) ? "dirac" : "klein-gordon";
            for (const auto& h : wavefn::harmonic_strengths(*d)) {
                out += csv_line({particle, std::string(family_name(d->family.kind)), std::to_string(h.k),
                                 format_real(h.r), format_real(h.strength)});
            }
        }
        return out;
    }
    Json doc = document("figure");
    doc["figure"] = 3;
    doc["n"] = config.n;
    doc["a"] = f.dirac.a;
    for (const auto* d : {&f.dirac, &f.kg}) {
        Json rows = Json::array();
        for (const auto& h : wavefn::harmonic_strengths(*d)) {
            rows.push_back({{"k", h.k}, {"r", h.r}, {"strength", h.strength}});
        }
        doc[is_dirac(d->family.kind) ? "dirac" : "klein_gordon"] = {
            {"family", family_name(d->family.kind)}, {"strengths", std::move(rows)}};
    }
    return dump(doc);
}

Json grid_point_json(const verify::GridPointReport& g) {
    return {{"family", family_name(g.family.kind)},
            {"n", g.family.n},
            {"a", g.a},
            {"dim", g.dim},
            {"worst_ode_ratio", g.worst_ode_ratio},
            {"worst_k", g.worst_k},
            {"extended_precision_used", g.extended_precision_used},
            {"sturm_discrepancy", g.sturm_discrepancy},
            {"dense_discrepancy", g.dense_discrepancy},
            {"dense_max_imag", g.dense_max_imag},
            {"min_relative_gap", g.min_relative_gap},
            {"failing_k", g.failing_k},
            {"pass", g.pass}};
}

Json pde_json(const verify::PdeCheckReport& p) {
    return {{"family", family_name(p.family.kind)},
            {"n", p.family.n},
            {"a", p.a},
            {"k", p.k_index},
            {"eta", p.eta},
            {"residual_h", p.report.residual_h},
            {"residual_half_h", p.report.residual_half_h},
            {"order", p.report.order},
            {"pass", p.pass}};
}

}  // namespace

std::string cmd_figure(const RunConfig& config, int which) {
    switch (which) {
        case 1: return figure1(config);
        case 2: return figure2(config);
        case 3: return figure3(config);
        default: throw DomainError("figure must be 1, 2 or 3, got " + std::to_string(which));
    }
}

CommandResult cmd_verify(const RunConfig& config, const CommandOptions& options) {
    verify::VerificationOptions vo;
    vo.eta_corruption = options.corrupt_eta;
    vo.seed = config.seed;
    vo.n_m = physparams::refractive_index(config.plasma.plasma_energy_ev,
                                          config.laser.photon_energy_ev);

    verify::VerificationReport report;
    if (options.all) {
        const std::vector<double> a_values = verify::default_a_values();
        report = verify::verify_grid(25, a_values, vo);
    } else {
        const SolutionFamily family = configured_family(config);
        const double a = config.coupling();
        const std::vector<double> z = verify::default_z_samples(config.seed);
        report.grid.push_back(verify::verify_point(family, a, z, vo.eta_corruption));
        report.pde = verify::verify_pde(family, a, vo);
        report.pass = report.grid.front().pass;
        for (const auto& p : report.pde) report.pass = report.pass && p.pass;
    }

    std::vector<std::string> failures;
    std::vector<std::string> notes;
    int free_points = 0, free_exact = 0;
    for (const auto& g : report.grid) {
        const std::string where = std::string(family_name(g.family.kind)) +
                                  " n=" + std::to_string(g.family.n) + " a=" + format_real(g.a);
        if (!g.pass) {
            std::string ks;
            for (int k : g.failing_k) ks += (ks.empty() ? "" : ",") + std::to_string(k);
            failures.push_back(where + (ks.empty() ? " (oracle disagreement)" : " k=" + ks));
        }
        if (g.a == 0.0) {
            ++free_points;
            if (matches_free_spectrum(eigensolve::solve_spectrum(inceop::build_operator(g.family, 0.0)))) {
                ++free_exact;
            }
        }
    }
    for (const auto& p : report.pde) {
        if (!p.pass) {
            failures.push_back("pde " + std::string(family_name(p.family.kind)) +
                               " n=" + std::to_string(p.family.n) + " a=" + format_real(p.a) +
                               " k=" + std::to_string(p.k_index));
        }
    }
    if (free_points > 0) {
        notes.push_back("a = 0: " + std::to_string(free_exact) + " of " + std::to_string(free_points) +
                        " spectra equal {4 r^2} exactly (to 1e-12)");
    }

    CommandResult result;
    result.exit_code = report.pass ? exit_ok : exit_verification_failure;
    if (!report.pass) {
        result.message = "verification failed:";
        for (const auto& f : failures) result.message += "\n  " + f;
    }

    if (config.format == OutputFormat::Csv) {
        std::string out = "# ince-volkov verify seed=" + std::to_string(config.seed) +
                          " pass=" + (report.pass ? "true" : "false") + "\n";
        for (const auto& n : notes) out += "# " + n + "\n";
        for (const auto& f : failures) out += "# FAIL " + f + "\n";
        out += "# worst_ode_ratio = max_k max_z |ODE LHS| / (1 + |eta| + a dim); order = log2(R(h)/R(h/2))\n";
        out += csv_line({"check", "family", "n", "a", "k", "worst_ode_ratio", "sturm_discrepancy",
                         "dense_discrepancy", "dense_max_imag", "pde_order", "pass"});
        for (const auto& g : report.grid) {
            out += csv_line({"grid", std::string(family_name(g.family.kind)), std::to_string(g.family.n),
                             format_real(g.a), std::to_string(g.worst_k), format_real(g.worst_ode_ratio),
                             format_real(g.sturm_discrepancy), format_real(g.dense_discrepancy),
                             format_real(g.dense_max_imag), "", g.pass ? "true" : "false"});
        }
        for (const auto& p : report.pde) {
            out += csv_line({"pde", std::string(family_name(p.family.kind)), std::to_string(p.family.n),
                             format_real(p.a), std::to_string(p.k_index), "", "", "", "",
                             format_real(p.report.order), p.pass ? "true" : "false"});
        }
        result.output = out;
        return result;
    }
    Json doc = document("verify");
    doc["seed"] = config.seed;
    doc["pass"] = report.pass;
    doc["tolerances"] = {{"ode", verify::ode_tolerance},
                         {"oracle", verify::oracle_tolerance},
                         {"dense_imag", verify::dense_imag_tolerance},
                         {"pde_order", verify::pde_order_target},
                         {"pde_order_band", verify::pde_order_tolerance}};
    Json grid = Json::array();
    for (const auto& g : report.grid) grid.push_back(grid_point_json(g));
    doc["grid"] = std::move(grid);
    Json pde = Json::array();
    for (const auto& p : report.pde) pde.push_back(pde_json(p));
    doc["pde"] = std::move(pde);
    doc["failures"] = failures;
    doc["notes"] = notes;
    result.output = dump(doc);
    return result;
}

CommandResult run_command(std::string_view command, const RunConfig& config,
                          const CommandOptions& options) {
    CommandResult result;
    try {
        if (command == "params") {
            result.output = cmd_params(config);
        } else if (command == "spectrum") {
            result.output = cmd_spectrum(config);
        } else if (command == "modes") {
            result.output = cmd_modes(config);
        } else if (command == "figure") {
            result.output = cmd_figure(config, options.figure);
        } else if (command == "verify") {
            result = cmd_verify(config, options);
        } else {
            throw DomainError("unknown command '" + std::string(command) + "'");
        }
    } catch (const DomainError& e) {
        result = {exit_input_error, "", std::string("input error: ") + e.what()};
    } catch (const StructuralError& e) {
        result = {exit_structural_error, "", std::string("structural error: ") + e.what()};
    } catch (const ConvergenceError& e) {
        result = {exit_structural_error, "", std::string("convergence error: ") + e.what()};
    } catch (const std::exception& e) {
        result = {exit_structural_error, "", std::string("internal error: ") + e.what()};
    }
    return result;
}

}  // namespace incevolkov::cli
