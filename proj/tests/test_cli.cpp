#include "commands.hpp"
#include "gie/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace gie;
using namespace gie::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "gie");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ','))
            cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

// "key: value" report lines.
std::map<std::string, double> parse_report(const std::string& text) {
    std::map<std::string, double> kv;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto pos = line.find(": ");
        if (pos == std::string::npos)
            continue;
        try {
            kv[line.substr(0, pos)] = std::stod(line.substr(pos + 2));
        } catch (const std::exception&) {
        }
    }
    return kv;
}

std::string tmp_path(const std::string& name) { return std::string(GIE_TEST_TMPDIR) + "/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("potential CSV contract") {
    const auto r = invoke({"potential"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find('\r') == std::string::npos);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 101);
    CHECK(rows[0] == std::vector<std::string>{"r_m", "phi_newton_J_per_kg", "phi_idg_J_per_kg"});
    CHECK(rows[1][0] == "1.00000000e-06");
    CHECK(rows[100][0] == "1.00000000e-03");
    const double plateau = std::stod(rows[1][2]);
    CHECK(std::abs(plateau + 7.63e-21) < 0.005e-21);
    CHECK(std::abs(std::stod(rows[100][2]) / std::stod(rows[100][1]) - 1.0) < 0.01);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        REQUIRE(rows[i].size() == 3);
        for (const auto& cell : rows[i]) {
            const auto e = cell.find('e');
            REQUIRE(e != std::string::npos);
            const auto mantissa = cell.substr(0, e);
            int digits = 0;
            for (char ch : mantissa)
                digits += (ch >= '0' && ch <= '9') ? 1 : 0;
            CHECK(digits == 9);
        }
    }
}

TEST_CASE("entropy sweep CSV contract") {
    const auto r = invoke({"entropy-sweep"});
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 51);
    CHECK(rows[0] == std::vector<std::string>{"min_sep_m", "S_newton_bits", "S_idg_bits"});
    for (std::size_t i = 1; i < rows.size(); ++i)
        CHECK(std::stod(rows[i][2]) <= std::stod(rows[i][1]));
    CHECK(std::stod(rows.back()[1]) < 1e-3);

    const auto at = parse_csv(invoke({"entropy-sweep", "--min", "2e-4", "--max", "3e-4", "--points", "2"}).out);
    REQUIRE(at.size() == 3);
    CHECK(std::abs(std::stod(at[1][1]) - 0.054) < 1e-3);
    CHECK(std::abs(std::stod(at[1][2]) - 0.053) < 1e-3);
}

TEST_CASE("CSV goes to --out and is byte stable") {
    const std::string path = tmp_path("potential_test.csv");
    REQUIRE(invoke({"potential", "--points", "7", "--out", path}).code == 0);
    const std::string first = slurp(path);
    REQUIRE(invoke({"potential", "--points", "7", "--out", path, "--serial"}).code == 0);
    CHECK(slurp(path) == first);
    CHECK(first.rfind("r_m,", 0) == 0);
    CHECK(invoke({"potential", "--out", "/nonexistent-dir/x.csv"}).code == kValidationError);
}

TEST_CASE("evolve reproduces the reference values") {
    const auto n = parse_report(invoke({"evolve"}).out);
    CHECK(std::abs(n.at("delta_phi_LR_rad") + 0.125) < 2e-3);
    CHECK(std::abs(n.at("delta_phi_RL_rad") - 0.439) < 2e-3);
    CHECK(std::abs(n.at("entropy_numeric_bits") - 0.054) < 1e-3);
    CHECK(std::abs(n.at("entropy_closed_form_bits") - 0.054) < 1e-3);

    const auto i = parse_report(invoke({"evolve", "--model", "idg"}).out);
    CHECK(std::abs(i.at("delta_phi_RL_rad") - 0.435) < 2e-3);
    CHECK(std::abs(i.at("entropy_numeric_bits") - 0.053) < 1e-3);
    CHECK(std::abs(i.at("witness_optimized") - 1.154) < 2e-3);

    const auto z = parse_report(invoke({"evolve", "--tau-s", "0"}).out);
    for (const char* key : {"entropy_numeric_bits", "concurrence", "negativity", "witness_fixed_frame"})
        CHECK(std::abs(z.at(key)) < 1e-15);
}

TEST_CASE("evolve writes a CSV row when asked") {
    const std::string path = tmp_path("evolve_test.csv");
    REQUIRE(invoke({"evolve", "--out", path}).code == 0);
    const auto rows = parse_csv(slurp(path));
    REQUIRE(rows.size() == 2);
    CHECK(rows[0][0] == "model");
    CHECK(rows[1][0] == "newtonian");
    CHECK(rows[1].size() == rows[0].size());
}

TEST_CASE("config file and flag precedence") {
    const std::string path = tmp_path("cfg_test.json");
    {
        std::ofstream f(path);
        f << R"({"tau_s": 0.0, "model": "idg", "seed": 7})";
    }
    const auto from_file = parse_report(invoke({"evolve", "--config", path}).out);
    CHECK(from_file.at("tau_s") == 0.0);
    CHECK(invoke({"evolve", "--config", path}).out.find("model: idg") != std::string::npos);
    const auto overridden = parse_report(invoke({"evolve", "--config", path, "--tau-s", "2.5"}).out);
    CHECK(overridden.at("tau_s") == 2.5);
    CHECK(invoke({"evolve", "--config", path, "--model", "newtonian"}).out.find("model: newtonian") !=
          std::string::npos);

    RunConfig cfg;
    CHECK_THROWS_AS(apply_config_json(R"({"mass": 1})", cfg), ConfigError);
    CHECK_THROWS_AS(apply_config_json(R"({"tau_s": "long"})", cfg), ConfigError);
    CHECK_THROWS_AS(apply_config_json("[1, 2]", cfg), ConfigError);
    CHECK_THROWS_AS(apply_config_json("{", cfg), ConfigError);
    CHECK_THROWS_AS(apply_config_json(R"({"seed": -3})", cfg), ConfigError);
    apply_config_json(R"({"mass_kg": 2e-14, "ms_ev": 0.01})", cfg);
    CHECK(cfg.mass_kg == 2e-14);
    CHECK(cfg.ms_ev == 0.01);
}

TEST_CASE("validation errors exit with 1") {
    CHECK(invoke({}).code == kValidationError);
    CHECK(invoke({"nope"}).code == kValidationError);
    CHECK(invoke({"evolve", "--model", "mond"}).code == kValidationError);
    CHECK(invoke({"evolve", "--d-m", "1e-4"}).code == kValidationError);
    CHECK(invoke({"evolve", "--ms-ev", "-1", "--model", "idg"}).code == kValidationError);
    CHECK(invoke({"potential", "--points", "1"}).code == kValidationError);
    CHECK(invoke({"potential", "--log", "--linear"}).code == kValidationError);
    CHECK(invoke({"convert"}).code == kValidationError);
    CHECK(invoke({"convert", "--ev", "-2"}).code == kValidationError);
    CHECK(invoke({"evolve", "--help"}).code == kSuccess);
}

TEST_CASE("locc-mc is deterministic and passes") {
    const auto a = invoke({"locc-mc", "--n", "300", "--collapse-samples", "5000", "--seed", "9"});
    const auto b = invoke({"locc-mc", "--n", "300", "--collapse-samples", "5000", "--seed", "9", "--serial"});
    CHECK(a.code == kSuccess);
    CHECK(a.out == b.out);
    CHECK(a.out.find("result: PASS") != std::string::npos);
    CHECK(a.out.find("quantum_baseline") != std::string::npos);
}

TEST_CASE("propagator-verify") {
    const auto d4 = invoke({"propagator-verify", "--k-samples", "30"});
    CHECK(d4.code == kSuccess);
    const auto again = invoke({"propagator-verify", "--k-samples", "30"});
    CHECK(d4.out == again.out);
    const auto d5 = invoke({"propagator-verify", "--k-samples", "30", "--dim", "5"});
    CHECK(d5.code == kSuccess);
    CHECK(parse_report(d5.out).at("completeness") < 1e-12);
    CHECK(invoke({"propagator-verify", "--dim", "2"}).code == kValidationError);
}

TEST_CASE("convert") {
    const auto e = parse_report(invoke({"convert", "--ev", "0.004"}).out);
    CHECK(e.at("length_m") == doctest::Approx(4.93317450e-05));
    CHECK(e.at("inverse_m") == doctest::Approx(2.02709229e+04));
    const auto m = parse_report(invoke({"convert", "--m", "4.93317450e-05"}).out);
    CHECK(m.at("energy_ev") == doctest::Approx(0.004).epsilon(1e-8));
}
