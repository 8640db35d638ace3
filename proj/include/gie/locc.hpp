#pragma once

#include "gie/entanglement.hpp"
#include "gie/interferometer.hpp"
#include "gie/linalg.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <vector>

namespace gie {

// Probabilistic set of local operators {A_i} with weights p(i).
struct LocalEnsemble {
    std::vector<Matrix2c> ops;
    std::vector<double> probs;
};

// One classical label j: its probability p(j) and the local operations it
// triggers on each side.
struct ClassicalBranch {
    double probability = 1.0;
    LocalEnsemble alice;
    LocalEnsemble bob;
};

// rho = sum_ijk p(i) p(j) p(k) A_ij rho_A A_ij^+ (x) B_jk rho_B B_jk^+
struct LoccChannel {
    std::vector<ClassicalBranch> branches;

    // Throws ConfigError on negative weights, weights not summing to 1
    // (1e-12), or ensembles that are not trace preserving on average (1e-10).
    void validate() const;
};

// A sampled classical field: label, probability, and the potential
// (J/kg) it produces at the branch points l, r, L, R.
struct ClassicalFieldConfig {
    int label = 0;
    double probability = 0.0;
    std::array<double, 4> field_record{};
};

struct LocalPhases {
    double alice_l;
    double alice_r;
    double bob_L;
    double bob_R;
};

struct SeparabilityReport {
    std::uint64_t channels = 0;
    double max_negativity = 0.0;
    double max_witness = 0.0;
    bool passed = false;
};

inline constexpr double kSeparableNegativityTol = 1e-12;
inline constexpr double kSeparableWitnessTol = 1e-9;

LoccChannel identity_channel();

DensityMatrix4 apply_locc(const LoccChannel& channel, const Vector2c& psi_a, const Vector2c& phi_b);

// diag(exp(i phi0), exp(i phi1))
Matrix2c local_phase_unitary(double phi0, double phi1);
Vector2c plus_state();

// Phases each mass acquires from the potential sourced by the other mass's
// 50/50-averaged position (mean-field / Schroedinger-Newton picture).
LocalPhases semiclassical_local_phases(const ExperimentConfig& config);
DensityMatrix4 semiclassical_evolution(const ExperimentConfig& config);

// Field record after both sources collapse. Label bit 1 set: A sits at r,
// else l. Bit 0 set: B sits at R, else L.
ClassicalFieldConfig collapsed_field(const ExperimentConfig& config, int label);
LoccChannel channel_from_fields(const ExperimentConfig& config,
                                const std::vector<ClassicalFieldConfig>& fields);

// Each sample collapses both source positions to one arm with probability 1/2
// and applies the resulting local phases; the output is the sample average.
DensityMatrix4 stochastic_collapse_evolution(const ExperimentConfig& config, std::uint64_t n_samples,
                                             std::uint64_t seed);
// Infinite-sample limit: equal-weight mixture over the four collapse outcomes.
DensityMatrix4 stochastic_collapse_average(const ExperimentConfig& config);

// Uniform SU(2) element from a normalized 4-component Gaussian quaternion.
Matrix2c random_unitary(std::mt19937_64& rng);
Vector2c random_qubit_state(std::mt19937_64& rng);
std::vector<double> random_simplex(std::mt19937_64& rng, std::size_t n);

// Deterministic per seed.
LoccChannel random_locc_channel(std::uint64_t seed, std::size_t n_labels, std::size_t n_ops);

} // namespace gie
