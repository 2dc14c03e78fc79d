#include "cli/config.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "incevolkov/errors.hpp"

namespace incevolkov::cli {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string_view unquote(std::string_view s) {
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return s.substr(1, s.size() - 2);
    return s;
}

double parse_real(std::string_view key, std::string_view value) {
    double out{};
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw DomainError("'" + std::string(key) + "' expects a number, got '" + std::string(value) + "'");
    }
    return out;
}

template <typename Int>
Int parse_integer(std::string_view key, std::string_view value) {
    Int out{};
    int base = 10;
    if (value.size() > 2 && value[0] == '0' && (value[1] == 'x' || value[1] == 'X')) {
        value.remove_prefix(2);
        base = 16;
    }
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out, base);
    if (ec != std::errc{} || ptr != value.data() + value.size() || value.empty()) {
        throw DomainError("'" + std::string(key) + "' expects an integer, got '" + std::string(value) + "'");
    }
    return out;
}

std::vector<int> parse_int_list(std::string_view key, std::string_view value) {
    std::vector<int> out;
    while (!value.empty()) {
        const auto comma = value.find(',');
        const std::string_view item = trim(value.substr(0, comma));
        const int k = parse_integer<int>(key, item);
        if (k < 1) throw DomainError("'" + std::string(key) + "' entries must be >= 1");
        out.push_back(k);
        if (comma == std::string_view::npos) break;
        value.remove_prefix(comma + 1);
    }
    if (out.empty()) throw DomainError("'" + std::string(key) + "' is empty");
    return out;
}

}  // namespace

physparams::Particle RunConfig::particle_model() const {
    if (particle == "electron") return physparams::Particle::electron();
    if (particle == "proton") return physparams::Particle::proton();
    throw DomainError("particle must be 'electron' or 'proton', got '" + particle + "'");
}

double RunConfig::coupling() const {
    if (a_override) return *a_override;
    laser.validate();
    plasma.validate();
    return physparams::coupling_parameter_a(laser, plasma);
}

OutputFormat parse_format(std::string_view text) {
    if (text == "json") return OutputFormat::Json;
    if (text == "csv") return OutputFormat::Csv;
    throw DomainError("output format must be 'json' or 'csv', got '" + std::string(text) + "'");
}

std::string_view format_name(OutputFormat format) {
    return format == OutputFormat::Json ? "json" : "csv";
}

void apply_setting(RunConfig& config, std::string_view key, std::string_view raw) {
    const std::string_view value = unquote(trim(raw));
    if (key == "laser.photon_energy_ev") {
        config.laser.photon_energy_ev = parse_real(key, value);
    } else if (key == "laser.intensity_w_cm2") {
        config.laser.intensity_w_cm2 = parse_real(key, value);
    } else if (key == "plasma.plasma_energy_ev") {
        config.plasma.plasma_energy_ev = parse_real(key, value);
    } else if (key == "plasma.electron_density_cm3") {
        config.plasma.electron_density_cm3 = parse_real(key, value);
    } else if (key == "particle") {
        config.particle = std::string(value);
        config.particle_model();
    } else if (key == "family") {
        config.family = std::string(family_name(parse_family(value)));
    } else if (key == "n") {
        config.n = parse_integer<int>(key, value);
        if (config.n < 1) throw DomainError("n must be >= 1");
    } else if (key == "a") {
        config.a_override = parse_real(key, value);
        if (!(*config.a_override >= 0.0)) throw DomainError("a must be >= 0");
    } else if (key == "k") {
        config.k_select = parse_int_list(key, value);
    } else if (key == "output.format") {
        config.format = parse_format(value);
    } else if (key == "output.path") {
        config.out_path = std::string(value);
    } else if (key == "seed") {
        config.seed = parse_integer<std::uint64_t>(key, value);
    } else if (key == "modes.points") {
        config.modes_points = parse_integer<int>(key, value);
        if (config.modes_points < 2) throw DomainError("modes.points must be >= 2");
    } else {
        throw DomainError("unknown configuration key '" + std::string(key) + "'");
    }
}

RunConfig parse_config(std::string_view text, RunConfig base) {
    std::set<std::string> seen;
    std::string section;
    int line_number = 0;
    std::istringstream lines{std::string(text)};
    std::string line;
    while (std::getline(lines, line)) {
        ++line_number;
        std::string_view view = line;
        if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
        view = trim(view);
        if (view.empty()) continue;
        const std::string where = "config line " + std::to_string(line_number) + ": ";
        if (view.front() == '[') {
            if (view.back() != ']') throw DomainError(where + "unterminated section header");
            section = std::string(trim(view.substr(1, view.size() - 2)));
            continue;
        }
        const auto eq = view.find('=');
        if (eq == std::string_view::npos) throw DomainError(where + "expected key = value");
        const std::string_view bare = trim(view.substr(0, eq));
        if (bare.empty()) throw DomainError(where + "empty key");
        const std::string key = section.empty() ? std::string(bare) : section + "." + std::string(bare);
        if (!seen.insert(key).second) throw DomainError(where + "repeated key '" + key + "'");
        try {
            apply_setting(base, key, view.substr(eq + 1));
        } catch (const DomainError& e) {
            throw DomainError(where + e.what());
        }
    }
    return base;
}

RunConfig load_config(const std::filesystem::path& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read config file '" + path.string() + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str(), std::move(base));
}

}  // namespace incevolkov::cli
