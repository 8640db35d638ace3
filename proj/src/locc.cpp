#include "gie/locc.hpp"

#include "gie/errors.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace gie {

namespace {

constexpr double kProbabilityTol = 1e-12;
constexpr double kTracePreservingTol = 1e-10;

void validate_weights(const std::vector<double>& p, const char* what) {
    if (p.empty())
        throw ConfigError(std::string(what) + ": empty distribution");
    double sum = 0.0;
    for (double x : p) {
        if (!(x >= 0.0) || x > 1.0)
            throw ConfigError(std::string(what) + ": probability outside [0, 1]");
        sum += x;
    }
    if (std::abs(sum - 1.0) > kProbabilityTol) {
        std::ostringstream os;
        os << what << ": probabilities sum to " << sum;
        throw ConfigError(os.str());
    }
}

void validate_ensemble(const LocalEnsemble& e, const char* what) {
    if (e.ops.size() != e.probs.size())
        throw ConfigError(std::string(what) + ": operator/probability count mismatch");
    validate_weights(e.probs, what);
    Matrix2c avg;
    for (std::size_t i = 0; i < e.ops.size(); ++i)
        avg += e.probs[i] * (e.ops[i].adjoint() * e.ops[i]);
    if (avg.max_abs_diff(Matrix2c::identity()) > kTracePreservingTol)
        throw ConfigError(std::string(what) + ": ensemble is not trace preserving on average");
}

Matrix2c apply_ensemble(const LocalEnsemble& e, const Matrix2c& rho) {
    Matrix2c out;
    for (std::size_t i = 0; i < e.ops.size(); ++i)
        out += e.probs[i] * (e.ops[i] * rho * e.ops[i].adjoint());
    return out;
}

LocalEnsemble single(const Matrix2c& op) { return {{op}, {1.0}}; }

double phase_from_potential(double potential, const ExperimentConfig& config) {
    return -config.mass_kg * potential * config.tau_s / config.constants.hbar;
}

} // namespace

void LoccChannel::validate() const {
    std::vector<double> labels;
    labels.reserve(branches.size());
    for (const auto& b : branches) {
        labels.push_back(b.probability);
        validate_ensemble(b.alice, "alice ensemble");
        validate_ensemble(b.bob, "bob ensemble");
    }
    validate_weights(labels, "classical labels");
}

LoccChannel identity_channel() {
    return {{ClassicalBranch{1.0, single(Matrix2c::identity()), single(Matrix2c::identity())}}};
}

DensityMatrix4 apply_locc(const LoccChannel& channel, const Vector2c& psi_a, const Vector2c& phi_b) {
    channel.validate();
    const Matrix2c rho_a = outer(psi_a);
    const Matrix2c rho_b = outer(phi_b);
    Matrix4c rho;
    for (const auto& branch : channel.branches)
        rho += branch.probability * kron(apply_ensemble(branch.alice, rho_a), apply_ensemble(branch.bob, rho_b));
    const cplx tr = rho.trace();
    if (std::abs(tr) == 0.0)
        throw DomainError("apply_locc: input states have zero norm");
    rho *= 1.0 / tr.real();
    return DensityMatrix4(rho);
}

Matrix2c local_phase_unitary(double phi0, double phi1) {
    Matrix2c u;
    u(0, 0) = std::polar(1.0, phi0);
    u(1, 1) = std::polar(1.0, phi1);
    return u;
}

Vector2c plus_state() {
    const double h = 1.0 / std::sqrt(2.0);
    return {cplx(h), cplx(h)};
}

LocalPhases semiclassical_local_phases(const ExperimentConfig& config) {
    const BranchPositions x = branch_positions(config);
    auto avg_phase = [&](double at, double src0, double src1) {
        return 0.5 * (branch_phase(std::abs(at - src0), config) + branch_phase(std::abs(at - src1), config));
    };
    return {avg_phase(x.l, x.L, x.R), avg_phase(x.r, x.L, x.R), avg_phase(x.L, x.l, x.r),
            avg_phase(x.R, x.l, x.r)};
}

DensityMatrix4 semiclassical_evolution(const ExperimentConfig& config) {
    const LocalPhases p = semiclassical_local_phases(config);
    const LoccChannel channel{{ClassicalBranch{1.0, single(local_phase_unitary(p.alice_l, p.alice_r)),
                                               single(local_phase_unitary(p.bob_L, p.bob_R))}}};
    return apply_locc(channel, plus_state(), plus_state());
}

ClassicalFieldConfig collapsed_field(const ExperimentConfig& config, int label) {
    if (label < 0 || label > 3)
        throw ConfigError("collapse label must be in 0..3");
    const BranchPositions x = branch_positions(config);
    // bit 1: A collapsed to r, bit 0: B collapsed to R
    const double source_a = (label & 2) ? x.r : x.l;
    const double source_b = (label & 1) ? x.R : x.L;
    auto pot = [&](double at, double src) {
        return potential_per_unit_mass(config.model, std::abs(at - src), config.mass_kg, config.constants);
    };
    ClassicalFieldConfig f;
    f.label = label;
    f.field_record = {pot(x.l, source_b), pot(x.r, source_b), pot(x.L, source_a), pot(x.R, source_a)};
    return f;
}

LoccChannel channel_from_fields(const ExperimentConfig& config, const std::vector<ClassicalFieldConfig>& fields) {
    LoccChannel channel;
    for (const auto& f : fields) {
        const auto& h = f.field_record;
        channel.branches.push_back(
            {f.probability,
             single(local_phase_unitary(phase_from_potential(h[0], config), phase_from_potential(h[1], config))),
             single(local_phase_unitary(phase_from_potential(h[2], config), phase_from_potential(h[3], config)))});
    }
    return channel;
}

DensityMatrix4 stochastic_collapse_evolution(const ExperimentConfig& config, std::uint64_t n_samples,
                                             std::uint64_t seed) {
    if (n_samples < 1)
        throw ConfigError("stochastic collapse needs at least one sample");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    std::array<std::uint64_t, 4> counts{};
    for (std::uint64_t s = 0; s < n_samples; ++s) {
        const int a = coin(rng) ? 1 : 0;
        const int b = coin(rng) ? 1 : 0;
        ++counts[static_cast<std::size_t>(2 * a + b)];
    }
    std::vector<ClassicalFieldConfig> fields;
    for (int label = 0; label < 4; ++label) {
        const auto count = counts[static_cast<std::size_t>(label)];
        if (count == 0)
            continue;
        ClassicalFieldConfig f = collapsed_field(config, label);
        f.probability = static_cast<double>(count) / static_cast<double>(n_samples);
        fields.push_back(f);
    }
    // Renormalize so rounding in count/n cannot break the 1e-12 simplex check.
    double total = 0.0;
    for (const auto& f : fields)
        total += f.probability;
    for (auto& f : fields)
        f.probability /= total;
    return apply_locc(channel_from_fields(config, fields), plus_state(), plus_state());
}

DensityMatrix4 stochastic_collapse_average(const ExperimentConfig& config) {
    std::vector<ClassicalFieldConfig> fields;
    for (int label = 0; label < 4; ++label) {
        ClassicalFieldConfig f = collapsed_field(config, label);
        f.probability = 0.25;
        fields.push_back(f);
    }
    return apply_locc(channel_from_fields(config, fields), plus_state(), plus_state());
}

Matrix2c random_unitary(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    double q[4];
    double norm2 = 0.0;
    do {
        norm2 = 0.0;
        for (double& x : q) {
            x = gauss(rng);
            norm2 += x * x;
        }
    } while (norm2 < 1e-300);
    const double inv = 1.0 / std::sqrt(norm2);
    for (double& x : q)
        x *= inv;
    Matrix2c u;
    u(0, 0) = cplx(q[0], q[1]);
    u(0, 1) = cplx(q[2], q[3]);
    u(1, 0) = cplx(-q[2], q[3]);
    u(1, 1) = cplx(q[0], -q[1]);
    return u;
}

Vector2c random_qubit_state(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector2c v;
    double norm2 = 0.0;
    do {
        norm2 = 0.0;
        for (auto& x : v) {
            x = cplx(gauss(rng), gauss(rng));
            norm2 += std::norm(x);
        }
    } while (norm2 < 1e-300);
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& x : v)
        x *= inv;
    return v;
}

std::vector<double> random_simplex(std::mt19937_64& rng, std::size_t n) {
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> p(n);
    for (auto& x : p)
        x = expo(rng);
    const double sum = std::accumulate(p.begin(), p.end(), 0.0);
    for (auto& x : p)
        x /= sum;
    return p;
}

LoccChannel random_locc_channel(std::uint64_t seed, std::size_t n_labels, std::size_t n_ops) {
    if (n_labels < 1 || n_ops < 1)
        throw ConfigError("random_locc_channel: sizes must be >= 1");
    std::mt19937_64 rng(seed);
    auto ensemble = [&] {
        LocalEnsemble e;
        for (std::size_t i = 0; i < n_ops; ++i)
            e.ops.push_back(random_unitary(rng));
        e.probs = random_simplex(rng, n_ops);
        return e;
    };
    LoccChannel channel;
    const auto label_probs = random_simplex(rng, n_labels);
    for (std::size_t j = 0; j < n_labels; ++j) {
        ClassicalBranch b;
        b.probability = label_probs[j];
        b.alice = ensemble();
        b.bob = ensemble();
        channel.branches.push_back(std::move(b));
    }
    return channel;
}

} // namespace gie
