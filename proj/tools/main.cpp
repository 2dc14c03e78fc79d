#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "incevolkov/errors.hpp"

namespace cli = incevolkov::cli;

int main(int argc, char** argv) {
    CLI::App app{"Ince-type spectra for Volkov-like states in an underdense plasma"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<std::string> family;
    std::optional<int> n;
    std::optional<double> a;
    std::optional<std::string> format;
    std::optional<std::string> out_path;
    std::optional<std::string> seed;
    bool all = false;
    int which = 0;
    double corrupt_eta = 0.0;

    auto shared = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "key = value configuration file");
        sub->add_option("--family", family, "dirac-plus, dirac-minus, kg-cos-even, kg-cos-odd, kg-sin-odd, kg-sin-even");
        sub->add_option("--n", n, "transverse quantum number (>= 1)");
        sub->add_option("--a", a, "coupling parameter; bypasses laser/plasma inputs");
        sub->add_option("--format", format, "json or csv");
        sub->add_option("--out", out_path, "output file (stdout otherwise)");
        sub->add_option("--seed", seed, "sampling seed");
        sub->add_flag("--all", all, "verify: run the full default grid");
    };

    CLI::App* params = app.add_subcommand("params", "derived laser/plasma parameters");
    CLI::App* spectrum = app.add_subcommand("spectrum", "eigenvalues and coefficient vectors");
    CLI::App* modes = app.add_subcommand("modes", "sampled modulation functions");
    CLI::App* figure = app.add_subcommand("figure", "figure data");
    CLI::App* verify = app.add_subcommand("verify", "residual, oracle and PDE checks");
    for (CLI::App* sub : {params, spectrum, modes, figure, verify}) shared(sub);
    figure->add_option("--which", which, "1, 2 or 3")->required()->check(CLI::Range(1, 3));
    // Negative-control hook for tests; not listed in --help.
    verify->add_option("--corrupt-eta", corrupt_eta)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? cli::exit_ok : cli::exit_input_error;
    }

    cli::RunConfig config;
    try {
        if (!config_path.empty()) config = cli::load_config(config_path);
        // Flags win over the config file.
        if (family) cli::apply_setting(config, "family", *family);
        if (n) cli::apply_setting(config, "n", std::to_string(*n));
        if (a) cli::apply_setting(config, "a", cli::format_real(*a));
        if (format) cli::apply_setting(config, "output.format", *format);
        if (out_path) cli::apply_setting(config, "output.path", *out_path);
        if (seed) cli::apply_setting(config, "seed", *seed);
    } catch (const incevolkov::DomainError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return cli::exit_input_error;
    }

    cli::CommandOptions options;
    options.figure = which;
    options.all = all;
    options.corrupt_eta = corrupt_eta;
    const CLI::App* chosen = app.get_subcommands().front();
    const cli::CommandResult result = cli::run_command(chosen->get_name(), config, options);

    if (!result.output.empty()) {
        if (config.out_path.empty()) {
            std::cout << result.output;
        } else {
            std::ofstream out(config.out_path, std::ios::binary);
            out << result.output;
            if (!out) {
                std::cerr << "input error: cannot write '" << config.out_path << "'\n";
                return cli::exit_input_error;
            }
        }
    }
    if (!result.message.empty()) std::cerr << result.message << "\n";
    return result.exit_code;
}
