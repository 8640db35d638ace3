#pragma once

#include "gie/interferometer.hpp"
#include "gie/kernels.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gie::cli {

enum ExitCode : int { kSuccess = 0, kValidationError = 1, kPropertyFailure = 2 };

// Everything a subcommand needs; defaults reproduce the reference setup
// (10^-14 kg, dx = 250 um, minimum separation 200 um, tau = 2.5 s, M_s = 4 meV).
struct RunConfig {
    double mass_kg = 1e-14;
    double tau_s = 2.5;
    double d_m = 4.5e-4;
    double delta_x_m = 2.5e-4;
    std::string model = "newtonian";
    double ms_ev = 0.004;
    std::uint64_t seed = 42;

    std::optional<double> sweep_min;
    std::optional<double> sweep_max;
    std::optional<std::size_t> points;
    bool log_scale = false;
    bool linear_scale = false;
    std::string out_path;
    Execution exec = Execution::Parallel;

    ExperimentConfig experiment() const;
    double ms_inverse_m() const;
};

// Reads the flat JSON config (keys mass_kg, tau_s, d_m, delta_x_m, model,
// ms_ev, seed) into `cfg`. Unknown keys and wrong types throw ConfigError.
void load_config_file(const std::string& path, RunConfig& cfg);
void apply_config_json(const std::string& json_text, RunConfig& cfg);

// Scientific notation, 9 significant digits.
std::string format_sci(double x);

void write_potential_csv(const std::vector<PotentialRow>& rows, std::ostream& out);
void write_entropy_csv(const std::vector<EntropyRow>& rows, std::ostream& out);

int cmd_potential(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_evolve(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_entropy_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_locc_mc(const RunConfig& cfg, std::uint64_t n_channels, std::uint64_t collapse_samples,
                std::ostream& out, std::ostream& err);
int cmd_propagator_verify(const RunConfig& cfg, std::size_t k_samples, std::size_t dim, std::ostream& out,
                          std::ostream& err);
int cmd_convert(std::optional<double> energy_ev, std::optional<double> length_m, std::ostream& out,
                std::ostream& err);

// Full command-line entry point.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace gie::cli
