#pragma once

#include "gie/linalg.hpp"
#include "gie/potentials.hpp"
#include "gie/units.hpp"

namespace gie {

// Two adjacent interferometers on a line. Mass A sits at l = 0 or r = dx,
// mass B at L = d or R = d + dx, so the closest pair (r, L) is d - dx apart.
struct ExperimentConfig {
    double mass_kg = 1e-14;
    double tau_s = 2.5;
    double d_m = 4.5e-4;
    double delta_x_m = 2.5e-4;
    PotentialModel model = PotentialModel::newtonian();
    PhysicalConstants constants = kCodata;

    double min_separation() const { return d_m - delta_x_m; }

    // Throws ConfigError on d <= dx, negative sizes, or a potential outside
    // the weak-field regime at the minimum separation.
    void validate() const;
};

struct BranchGeometry {
    double r_lL;
    double r_lR;
    double r_rL;
    double r_rR;
};

struct BranchPositions {
    double l;
    double r;
    double L;
    double R;
};

// Joint state of the two path qubits, amplitudes ordered (lL, lR, rL, rR).
struct TwoQubitState {
    Vector4c amplitudes{};

    double norm() const;
};

struct DeltaPhases {
    double lr; // phi(d + dx) - phi(d)
    double rl; // phi(d - dx) - phi(d)
};

struct CoherentEvolution {
    double global_phase;
    TwoQubitState state;
};

BranchGeometry branch_distances(const ExperimentConfig& config);
BranchPositions branch_positions(const ExperimentConfig& config);

// phi(r) = -m Phi(r) tau / hbar; G m^2 tau / (hbar r) for the Newtonian model.
double branch_phase(double r, const ExperimentConfig& config);

// Each branch ab picks up exp(i phi(r_ab)) on top of the uniform 1/2 amplitude.
TwoQubitState evolve(const ExperimentConfig& config);

DeltaPhases delta_phases(const ExperimentConfig& config);

// phi(d - dx) + phi(d + dx) - 2 phi(d): the only local-unitary invariant of evolve().
double residual_entangling_phase(const ExperimentConfig& config);

// Both masses in coherent (non-NOON) states: every pair including the
// intra-interferometer ones (r_lr = r_LR = dx) interacts, and the phase
// factors out globally.
CoherentEvolution coherent_state_evolution(const ExperimentConfig& config);

} // namespace gie
