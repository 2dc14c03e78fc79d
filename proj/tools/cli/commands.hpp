#pragma once

#include <string>
#include <string_view>

#include "cli/config.hpp"

namespace incevolkov::cli {

inline constexpr std::string_view schema_version = "ince-volkov/1";

enum ExitCode : int {
    exit_ok = 0,
    exit_input_error = 1,
    exit_verification_failure = 2,
    exit_structural_error = 3,
};

struct CommandOptions {
    int figure{0};             // figure: 1, 2 or 3
    bool all{false};           // verify: full default grid
    double corrupt_eta{0.0};   // verify: test hook, shifts every eta
};

struct CommandResult {
    int exit_code{exit_ok};
    std::string output;   // document written to --out or stdout
    std::string message;  // diagnostic for stderr
};

// Each command returns the document in config.format. Errors propagate as
// exceptions; run_command maps them to exit codes.
std::string cmd_params(const RunConfig& config);
std::string cmd_spectrum(const RunConfig& config);
std::string cmd_modes(const RunConfig& config);
std::string cmd_figure(const RunConfig& config, int which);
CommandResult cmd_verify(const RunConfig& config, const CommandOptions& options);

// Dispatch by name with exception -> exit code mapping:
// DomainError (bad input, overdense plasma) -> 1, StructuralError and
// ConvergenceError -> 3, failing checks -> 2.
CommandResult run_command(std::string_view command, const RunConfig& config,
                          const CommandOptions& options = {});

// "%.17g" rendering used by every CSV writer.
std::string format_real(double value);

}  // namespace incevolkov::cli
