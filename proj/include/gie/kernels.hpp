#pragma once

// Batch kernels behind the CLI. Every kernel has a serial reference path and
// an OpenMP path; both produce bit-identical results (rows are written by
// index, reductions are max over independent per-item values).

#include "gie/interferometer.hpp"
#include "gie/locc.hpp"
#include "gie/potentials.hpp"

#include <cstdint>
#include <vector>

namespace gie {

enum class Execution { Serial, Parallel };

std::vector<double> linear_grid(double lo, double hi, std::size_t points);
std::vector<double> log_grid(double lo, double hi, std::size_t points);

struct PotentialRow {
    double r_m;
    double phi_newton;
    double phi_idg;
};

struct EntropyRow {
    double min_sep_m;
    double s_newton;
    double s_idg;
};

struct QuadratureAgreement {
    std::vector<double> radii;
    std::vector<double> closed_form;
    std::vector<double> quadrature;
    double max_relative_error = 0.0;
};

std::vector<PotentialRow> potential_sweep(const std::vector<double>& radii, double m_source, double ms_inverse_m,
                                          Execution exec = Execution::Parallel, const PhysicalConstants& k = kCodata);

// Sweeps the minimum separation d - dx at fixed dx, mass and tau taken from
// `base`. Entropies come from evolve -> partial trace -> eigenvalues.
std::vector<EntropyRow> entropy_sweep(const std::vector<double>& min_separations, const ExperimentConfig& base,
                                      double ms_inverse_m, Execution exec = Execution::Parallel);

QuadratureAgreement quadrature_agreement(const std::vector<double>& radii, const PotentialModel& model,
                                         double m_source, Execution exec = Execution::Parallel,
                                         const PhysicalConstants& k = kCodata);

// Per-channel seed: independent stream for channel `index` of a run.
std::uint64_t channel_seed(std::uint64_t seed, std::uint64_t index);

// Draws n random LOCC channels (1-4 classical labels, 1-3 operators per
// side) applied to random product inputs. Passes iff every output has
// negativity <= 1e-12 and frame-optimized witness <= 1 + 1e-9.
SeparabilityReport monte_carlo_separability(std::uint64_t n_channels, std::uint64_t seed,
                                            Execution exec = Execution::Parallel);

} // namespace gie
