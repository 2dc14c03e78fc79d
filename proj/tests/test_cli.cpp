#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>
#include <sys/wait.h>

#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "incevolkov/errors.hpp"

using namespace incevolkov;
using namespace incevolkov::cli;
using nlohmann::json;

namespace {

std::vector<std::string> data_rows(const std::string& csv) {
    std::vector<std::string> rows;
    std::istringstream in(csv);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (header) {
            header = false;
            continue;
        }
        rows.push_back(line);
    }
    return rows;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> cells;
    std::istringstream in(line);
    std::string cell;
    while (std::getline(in, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

RunConfig with(std::string_view text) { return parse_config(text); }

int run_exe(const std::string& args, const std::string& stdout_path = "/dev/null") {
    const std::string command =
        std::string(INCE_VOLKOV_EXE) + " " + args + " > " + stdout_path + " 2>/dev/null";
    const int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("config parsing") {
    const RunConfig c = parse_config(R"(
# figure-2 setup
[laser]
photon_energy_ev = 1.563
intensity_w_cm2 = 1e8   # peak
[plasma]
plasma_energy_ev = 1.0
[]
family = "kg-cos-even"
n = 7
a = 2.5
k = 1, 3,4
output.format = csv
seed = 0x11CE
modes.points = 65
particle = proton
)");
    CHECK(c.laser.photon_energy_ev == 1.563);
    CHECK(c.laser.intensity_w_cm2 == 1e8);
    CHECK(c.family == "kg-cos-even");
    CHECK(c.n == 7);
    CHECK(c.a_override == 2.5);
    CHECK(c.k_select == std::vector<int>{1, 3, 4});
    CHECK(c.format == OutputFormat::Csv);
    CHECK(c.seed == 0x11CE);
    CHECK(c.modes_points == 65);
    CHECK(c.particle == "proton");
    CHECK(c.coupling() == 2.5);

    const RunConfig dotted = with("laser.intensity_w_cm2 = 4e8\nfamily = dirac\n");
    CHECK(dotted.laser.intensity_w_cm2 == 4e8);
    CHECK(dotted.family == "dirac-plus");
    CHECK_FALSE(dotted.a_override.has_value());
}

TEST_CASE("strict config rejection") {
    CHECK_THROWS_AS(with("bogus = 1"), DomainError);
    CHECK_THROWS_AS(with("[laser]\nwavelength = 800"), DomainError);
    CHECK_THROWS_AS(with("n = 3\nn = 4"), DomainError);
    CHECK_THROWS_AS(with("n = three"), DomainError);
    CHECK_THROWS_AS(with("n = 0"), DomainError);
    CHECK_THROWS_AS(with("a = -1"), DomainError);
    CHECK_THROWS_AS(with("a = 1.5x"), DomainError);
    CHECK_THROWS_AS(with("family = mathieu"), DomainError);
    CHECK_THROWS_AS(with("output.format = xml"), DomainError);
    CHECK_THROWS_AS(with("particle = muon"), DomainError);
    CHECK_THROWS_AS(with("k = 0"), DomainError);
    CHECK_THROWS_AS(with("just some words"), DomainError);
    CHECK_THROWS_AS(with("[laser"), DomainError);
    try {
        with("n = 2\n\nbogus = 1\n");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
        CHECK(std::string(e.what()).find("bogus") != std::string::npos);
    }
    CHECK_THROWS_AS(load_config("/nonexistent/config.txt"), DomainError);
}

TEST_CASE("params") {
    const json doc = json::parse(cmd_params(RunConfig{}));
    CHECK(doc["schema"] == "ince-volkov/1");
    const double a = doc["quantities"]["a"]["value"];
    CHECK(a >= 13.5);
    CHECK(a <= 14.3);
    CHECK(doc["notes"][0].get<std::string>().find("rounds to 14") != std::string::npos);
    CHECK(doc["quantities"]["n_m"]["value"].get<double>() == doctest::Approx(0.7685).epsilon(1e-4));
    for (const char* key : {"n_m", "k_p", "lambda", "a", "mu0", "kappa_star", "v_ph", "v_gr"}) {
        CHECK(doc["quantities"].contains(key));
        CHECK(doc["quantities"][key].contains("unit"));
    }

    const json dark = json::parse(cmd_params(with("laser.intensity_w_cm2 = 0")));
    CHECK(dark["quantities"]["a"]["value"] == 0.0);
    CHECK(dark["quantities"]["mu0"]["value"] == 0.0);

    const CommandResult over =
        run_command("params", with("plasma.plasma_energy_ev = 2\nlaser.photon_energy_ev = 1"));
    CHECK(over.exit_code == exit_input_error);
    CHECK(over.message.find("underdense") != std::string::npos);

    const std::string csv = cmd_params(with("output.format = csv"));
    CHECK(csv.find("quantity,value,unit,definition") != std::string::npos);
    CHECK(csv.find("\"sqrt(1 - n_m^2), spin eigenvalue magnitude\"") != std::string::npos);
}

TEST_CASE("spectrum") {
    const std::string dirac = cmd_spectrum(with("family = dirac\nn = 20\na = 14\noutput.format = csv"));
    const std::vector<std::string> rows = data_rows(dirac);
    CHECK(rows.size() == 40u);
    for (const std::string& row : rows) {
        const std::vector<std::string> cells = split(row);
        REQUIRE(cells.size() == 6u);
        CHECK(std::stod(cells[2]) < std::stod(cells[3]));
    }
    const std::string kg = cmd_spectrum(with("family = kg-cos-even\nn = 20\na = 14\noutput.format = csv"));
    CHECK(data_rows(kg).size() == 21u);
    CHECK(kg.find("# kg-cos-even n=20 has 21 modes") != std::string::npos);

    const json free = json::parse(cmd_spectrum(with("family = dirac\nn = 1\na = 0")));
    CHECK(free["schema"] == "ince-volkov/1");
    CHECK(free["etas"] == json::array({0.0, 4.0}));
    CHECK(free["k_labels"] == json::array({2, 1}));
    CHECK(free["q"] == 1);
    for (const char* key : {"family", "n", "q", "a", "etas", "vectors", "residuals", "k_labels"}) {
        CHECK(free.contains(key));
    }

    // Negative eta is classified, not rejected.
    const std::string strong = cmd_spectrum(with("family = kg-cos-even\nn = 1\na = 3\noutput.format = csv"));
    CHECK(strong.find("evanescent") != std::string::npos);
}

TEST_CASE("modes") {
    const json doc = json::parse(cmd_modes(with("family = kg-cos-even\nn = 3\na = 5\nk = 1, 2\nmodes.points = 33")));
    REQUIRE(doc["modes"].size() == 2u);
    CHECK(doc["modes"][0]["k"] == 1);
    CHECK(doc["xi"].size() == 33u);
    double peak = 0.0;
    for (double v : doc["modes"][1]["density"]) peak = std::max(peak, v);
    CHECK(peak == 1.0);
    CHECK(run_command("modes", with("n = 2\nk = 9")).exit_code == exit_input_error);
    const std::string csv = cmd_modes(with("family = dirac\nn = 2\na = 1\nk = 4\nmodes.points = 9\noutput.format = csv"));
    CHECK(data_rows(csv).size() == 9u);
}

TEST_CASE("figure 1") {
    const std::string csv = cmd_figure(with("output.format = csv"), 1);
    const std::vector<std::string> rows = data_rows(csv);
    REQUIRE(rows.size() == 721u);
    const std::vector<std::string> center = split(rows[360]);
    const std::vector<std::string> edge = split(rows[0]);
    CHECK(std::stod(center[0]) == 0.0);
    CHECK(std::abs(std::stod(center[1]) / std::exp(-14.0) - 1.0) < 1e-10);
    CHECK(std::abs(std::stod(center[2]) / std::exp(-20.0) - 1.0) < 1e-10);
    CHECK(std::stod(edge[1]) == 1.0);
    CHECK(std::stod(split(rows.back())[2]) == 1.0);
    CHECK(csv.find("density_contrast=e^a") != std::string::npos);
    const json doc = json::parse(cmd_figure(RunConfig{}, 1));
    CHECK(doc["series"].size() == 2u);
    CHECK(doc["series"][0]["amplitude_contrast"].get<double>() ==
          doctest::Approx(std::exp(7.0)).epsilon(1e-14));
}

TEST_CASE("figure 2 and 3") {
    const std::string fig2 = cmd_figure(with("output.format = csv"), 2);
    CHECK(data_rows(fig2).size() == 61u);
    const json doc2 = json::parse(cmd_figure(RunConfig{}, 2));
    CHECK(doc2["dirac"]["etas"].size() == 40u);
    CHECK(doc2["klein_gordon"]["etas"].size() == 21u);
    CHECK(doc2["dirac_pairing"].size() == 19u);

    const std::string fig3 = cmd_figure(with("a = 0\noutput.format = csv"), 3);
    const std::vector<std::string> rows = data_rows(fig3);
    CHECK(rows.size() == 40u * 40u + 21u * 21u);
    int spikes = 0;
    for (const std::string& row : rows) {
        const double s = std::stod(split(row)[4]);
        CHECK((s == 0.0 || s == 1.0));
        if (s == 1.0) ++spikes;
    }
    CHECK(spikes == 61);
    CHECK(run_command("figure", RunConfig{}, {4, false, 0.0}).exit_code == exit_input_error);
}

TEST_CASE("verify") {
    const CommandResult ok = cmd_verify(with("family = dirac\nn = 2\na = 5"), {});
    CHECK(ok.exit_code == exit_ok);
    const json doc = json::parse(ok.output);
    CHECK(doc["pass"] == true);
    CHECK(doc["grid"].size() == 1u);
    CHECK(doc["pde"].size() == 4u);

    const CommandResult bad = run_command("verify", with("family = kg-cos-even\nn = 2\na = 5"), {0, false, 0.25});
    CHECK(bad.exit_code == exit_verification_failure);
    CHECK(bad.message.find("kg-cos-even n=2 a=5 k=1,2,3") != std::string::npos);

    const CommandResult free = cmd_verify(with("family = kg-sin-odd\nn = 3\na = 0"), {});
    CHECK(free.exit_code == exit_ok);
    CHECK(free.output.find("spectra equal {4 r^2} exactly") != std::string::npos);
}

TEST_CASE("byte determinism") {
    const RunConfig c = with("family = dirac\nn = 6\na = 14\noutput.format = csv");
    CHECK(cmd_spectrum(c) == cmd_spectrum(c));
    CHECK(cmd_figure(c, 3) == cmd_figure(c, 3));
    const RunConfig j = with("family = kg-cos-odd\nn = 4\na = 2");
    CHECK(cmd_verify(j, {}).output == cmd_verify(j, {}).output);
    CHECK(cmd_modes(j) == cmd_modes(j));
}

TEST_CASE("executable: exit codes, flags and files") {
    const std::filesystem::path dir = std::filesystem::temp_directory_path() / "ince_volkov_cli_test";
    std::filesystem::create_directories(dir);
    const std::filesystem::path cfg = dir / "run.cfg";
    std::ofstream(cfg) << "family = kg-cos-even\nn = 20\na = 14\noutput.format = csv\n";

    CHECK(run_exe("params") == 0);
    CHECK(run_exe("params --config " + cfg.string()) == 0);
    const std::filesystem::path out = dir / "spectrum.csv";
    CHECK(run_exe("spectrum --config " + cfg.string() + " --out " + out.string()) == 0);
    CHECK(data_rows(slurp(out)).size() == 21u);
    // Flags win over the file.
    CHECK(run_exe("spectrum --config " + cfg.string() + " --family dirac --out " + out.string()) == 0);
    CHECK(data_rows(slurp(out)).size() == 40u);
    const std::filesystem::path again = dir / "again.csv";
    CHECK(run_exe("spectrum --config " + cfg.string() + " --family dirac --out " + again.string()) == 0);
    CHECK(slurp(out) == slurp(again));

    std::ofstream(dir / "overdense.cfg") << "plasma.plasma_energy_ev = 2\nlaser.photon_energy_ev = 1\n";
    CHECK(run_exe("params --config " + (dir / "overdense.cfg").string()) == 1);
    std::ofstream(dir / "unknown.cfg") << "colour = blue\n";
    CHECK(run_exe("params --config " + (dir / "unknown.cfg").string()) == 1);
    CHECK(run_exe("spectrum --format yaml") == 1);
    CHECK(run_exe("frobnicate") == 1);
    CHECK(run_exe("figure --which 2 --format csv") == 0);
    CHECK(run_exe("figure --which 5") == 1);
    CHECK(run_exe("verify --n 2 --a 5") == 0);
    CHECK(run_exe("verify --n 2 --a 5 --corrupt-eta 1") == 2);
    CHECK(run_exe("verify --n 2 --a 5 --seed 7") == 0);
    std::filesystem::remove_all(dir);
}

}  // TEST_SUITE
