#include "gie/kernels.hpp"

#include "gie/entanglement.hpp"
#include "gie/errors.hpp"
#include "gie/graviton.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

namespace gie {

std::vector<double> linear_grid(double lo, double hi, std::size_t points) {
    if (points < 2 || !(hi > lo))
        throw ConfigError("grid needs at least 2 points and max > min");
    std::vector<double> g(points);
    const double step = (hi - lo) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i)
        g[i] = lo + step * static_cast<double>(i);
    g.back() = hi;
    return g;
}

std::vector<double> log_grid(double lo, double hi, std::size_t points) {
    if (!(lo > 0.0))
        throw ConfigError("log grid needs a positive lower bound");
    auto exps = linear_grid(std::log10(lo), std::log10(hi), points);
    for (auto& e : exps)
        e = std::pow(10.0, e);
    exps.front() = lo;
    exps.back() = hi;
    return exps;
}

std::vector<PotentialRow> potential_sweep(const std::vector<double>& radii, double m_source, double ms_inverse_m,
                                          Execution exec, const PhysicalConstants& k) {
    const PotentialModel newton = PotentialModel::newtonian();
    const PotentialModel idg = PotentialModel::idg(ms_inverse_m);
    const auto n = static_cast<std::ptrdiff_t>(radii.size());
    std::vector<PotentialRow> rows(radii.size());
    auto row = [&](std::ptrdiff_t i) {
        const double r = radii[static_cast<std::size_t>(i)];
        rows[static_cast<std::size_t>(i)] = {r, potential_per_unit_mass(newton, r, m_source, k),
                                             potential_per_unit_mass(idg, r, m_source, k)};
    };
    if (exec == Execution::Serial) {
        for (std::ptrdiff_t i = 0; i < n; ++i)
            row(i);
    } else {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < n; ++i)
            row(i);
    }
    return rows;
}

std::vector<EntropyRow> entropy_sweep(const std::vector<double>& min_separations, const ExperimentConfig& base,
                                      double ms_inverse_m, Execution exec) {
    for (double s : min_separations)
        if (!(s > 0.0))
            throw ConfigError("minimum separation must be positive");
    const auto n = static_cast<std::ptrdiff_t>(min_separations.size());
    std::vector<EntropyRow> rows(min_separations.size());
    auto entropy = [](const ExperimentConfig& cfg) {
        return von_neumann_entropy(partial_trace_B(density_matrix(evolve(cfg))));
    };
    auto row = [&](std::ptrdiff_t i) {
        const double sep = min_separations[static_cast<std::size_t>(i)];
        ExperimentConfig cfg = base;
        cfg.d_m = sep + base.delta_x_m;
        cfg.model = PotentialModel::newtonian();
        const double s_newton = entropy(cfg);
        cfg.model = PotentialModel::idg(ms_inverse_m);
        rows[static_cast<std::size_t>(i)] = {sep, s_newton, entropy(cfg)};
    };
    if (exec == Execution::Serial) {
        for (std::ptrdiff_t i = 0; i < n; ++i)
            row(i);
    } else {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < n; ++i)
            row(i);
    }
    return rows;
}

QuadratureAgreement quadrature_agreement(const std::vector<double>& radii, const PotentialModel& model,
                                         double m_source, Execution exec, const PhysicalConstants& k) {
    QuadratureAgreement out;
    out.radii = radii;
    out.closed_form.resize(radii.size());
    out.quadrature.resize(radii.size());
    const auto n = static_cast<std::ptrdiff_t>(radii.size());
    auto point = [&](std::ptrdiff_t i) {
        const auto u = static_cast<std::size_t>(i);
        out.closed_form[u] = potential_per_unit_mass(model, radii[u], m_source, k);
        out.quadrature[u] = potential_from_propagator(model, radii[u], m_source, k);
    };
    if (exec == Execution::Serial) {
        for (std::ptrdiff_t i = 0; i < n; ++i)
            point(i);
    } else {
        // Exceptions may not cross the OpenMP region boundary.
        std::vector<std::exception_ptr> errors(radii.size());
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            try {
                point(i);
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }
        for (const auto& e : errors)
            if (e)
                std::rethrow_exception(e);
    }
    for (std::size_t i = 0; i < radii.size(); ++i) {
        const double rel = std::abs(out.quadrature[i] - out.closed_form[i]) / std::abs(out.closed_form[i]);
        out.max_relative_error = std::max(out.max_relative_error, rel);
    }
    return out;
}

std::uint64_t channel_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 finalizer over (seed, index)
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

struct ChannelOutcome {
    double negativity;
    double witness;
};

ChannelOutcome sample_channel(std::uint64_t seed, std::uint64_t index) {
    std::mt19937_64 rng(channel_seed(seed, index));
    const std::size_t n_labels = 1 + rng() % 4;
    const std::size_t n_ops = 1 + rng() % 3;
    const LoccChannel channel = random_locc_channel(rng(), n_labels, n_ops);
    const Vector2c psi = random_qubit_state(rng);
    const Vector2c phi = random_qubit_state(rng);
    const DensityMatrix4 rho = apply_locc(channel, psi, phi);
    return {negativity(rho), witness_optimized(rho)};
}

} // namespace

SeparabilityReport monte_carlo_separability(std::uint64_t n_channels, std::uint64_t seed, Execution exec) {
    if (n_channels < 1)
        throw ConfigError("monte carlo run needs at least one channel");
    SeparabilityReport report;
    report.channels = n_channels;
    double max_neg = 0.0;
    double max_wit = 0.0;
    const auto n = static_cast<std::int64_t>(n_channels);
    if (exec == Execution::Serial) {
        for (std::int64_t i = 0; i < n; ++i) {
            const auto o = sample_channel(seed, static_cast<std::uint64_t>(i));
            max_neg = std::max(max_neg, o.negativity);
            max_wit = std::max(max_wit, o.witness);
        }
    } else {
#pragma omp parallel for schedule(static) reduction(max : max_neg, max_wit)
        for (std::int64_t i = 0; i < n; ++i) {
            const auto o = sample_channel(seed, static_cast<std::uint64_t>(i));
            max_neg = std::max(max_neg, o.negativity);
            max_wit = std::max(max_wit, o.witness);
        }
    }
    report.max_negativity = max_neg;
    report.max_witness = max_wit;
    report.passed = max_neg <= kSeparableNegativityTol && max_wit <= 1.0 + kSeparableWitnessTol;
    return report;
}

} // namespace gie
