#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "incevolkov/physparams.hpp"
#include "incevolkov/verify.hpp"

// Run configuration: a flat key = value file with dotted keys, optionally
// grouped under [section] headers. Unknown or repeated keys are errors.
//
//   laser.photon_energy_ev    = 1.563
//   laser.intensity_w_cm2     = 1e8
//   plasma.plasma_energy_ev   = 1.0
//   plasma.electron_density_cm3 = ...      (optional)
//   particle                  = electron | proton
//   family                    = dirac-plus | dirac-minus | kg-cos-even | ...
//   n                         = 20
//   a                         = 14         (optional; bypasses laser/plasma)
//   k                         = 1, 2, 3    (optional mode selection)
//   output.format             = json | csv
//   output.path               = out.json   (optional; stdout otherwise)
//   seed                      = 4558
//   modes.points              = 257
namespace incevolkov::cli {

enum class OutputFormat { Json, Csv };

struct RunConfig {
    physparams::LaserInput laser;
    physparams::PlasmaInput plasma;
    std::string particle{"electron"};
    std::string family{"dirac-plus"};
    int n{20};
    std::optional<double> a_override;
    std::vector<int> k_select;
    OutputFormat format{OutputFormat::Json};
    std::string out_path;
    std::uint64_t seed{verify::sample_seed};
    int modes_points{257};

    physparams::Particle particle_model() const;
    // a_override when set, otherwise the coupling parameter of laser + plasma.
    double coupling() const;
};

// Applies the entries of `text` on top of `base`. Throws DomainError naming
// the line for syntax errors, unknown keys, repeated keys and bad values.
RunConfig parse_config(std::string_view text, RunConfig base = {});
RunConfig load_config(const std::filesystem::path& path, RunConfig base = {});

// Single-key assignment with the same validation as the file parser.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

OutputFormat parse_format(std::string_view text);
std::string_view format_name(OutputFormat format);

}  // namespace incevolkov::cli
