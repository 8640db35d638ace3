#include "gie/interferometer.hpp"

#include "gie/errors.hpp"

#include <cmath>
#include <sstream>

namespace gie {

void ExperimentConfig::validate() const {
    if (!(mass_kg > 0.0) || !std::isfinite(mass_kg))
        throw ConfigError("mass must be positive");
    if (!(tau_s >= 0.0) || !std::isfinite(tau_s))
        throw ConfigError("interaction time must be non-negative");
    if (!(delta_x_m >= 0.0))
        throw ConfigError("superposition size must be non-negative");
    if (!(d_m > delta_x_m)) {
        std::ostringstream os;
        os << "arm distance d=" << d_m << " must exceed superposition size dx=" << delta_x_m;
        throw ConfigError(os.str());
    }
    if (!linearity_check(model, min_separation(), mass_kg, constants))
        throw ConfigError("potential at minimum separation leaves the weak-field regime");
}

BranchGeometry branch_distances(const ExperimentConfig& config) {
    config.validate();
    return {config.d_m, config.d_m + config.delta_x_m, config.d_m - config.delta_x_m, config.d_m};
}

BranchPositions branch_positions(const ExperimentConfig& config) {
    config.validate();
    return {0.0, config.delta_x_m, config.d_m, config.d_m + config.delta_x_m};
}

double branch_phase(double r, const ExperimentConfig& config) {
    const double phi = potential_per_unit_mass(config.model, r, config.mass_kg, config.constants);
    return -config.mass_kg * phi * config.tau_s / config.constants.hbar;
}

double TwoQubitState::norm() const {
    double s = 0.0;
    for (const auto& a : amplitudes)
        s += std::norm(a);
    return std::sqrt(s);
}

TwoQubitState evolve(const ExperimentConfig& config) {
    const BranchGeometry g = branch_distances(config);
    const double distances[4] = {g.r_lL, g.r_lR, g.r_rL, g.r_rR};
    TwoQubitState psi;
    for (int i = 0; i < 4; ++i)
        psi.amplitudes[i] = 0.5 * std::polar(1.0, branch_phase(distances[i], config));
    return psi;
}

DeltaPhases delta_phases(const ExperimentConfig& config) {
    const BranchGeometry g = branch_distances(config);
    const double base = branch_phase(g.r_lL, config);
    return {branch_phase(g.r_lR, config) - base, branch_phase(g.r_rL, config) - base};
}

double residual_entangling_phase(const ExperimentConfig& config) {
    const DeltaPhases dp = delta_phases(config);
    return dp.rl + dp.lr;
}

CoherentEvolution coherent_state_evolution(const ExperimentConfig& config) {
    const BranchGeometry g = branch_distances(config);
    if (!(config.delta_x_m > 0.0))
        throw ConfigError("coherent-state evolution needs a non-zero superposition size");
    const double intra = config.delta_x_m;
    const double distances[6] = {g.r_lL, g.r_lR, g.r_rL, g.r_rR, intra, intra};
    double total = 0.0;
    for (double r : distances)
        total += branch_phase(r, config);
    CoherentEvolution out{total, {}};
    for (auto& a : out.state.amplitudes)
        a = 0.5 * std::polar(1.0, total);
    return out;
}

} // namespace gie
