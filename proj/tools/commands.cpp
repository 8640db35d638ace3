#include "commands.hpp"

#include "gie/entanglement.hpp"
#include "gie/errors.hpp"
#include "gie/graviton.hpp"
#include "gie/kernels.hpp"
#include "gie/locc.hpp"
#include "gie/units.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

namespace gie::cli {

ExperimentConfig RunConfig::experiment() const {
    ExperimentConfig e;
    e.mass_kg = mass_kg;
    e.tau_s = tau_s;
    e.d_m = d_m;
    e.delta_x_m = delta_x_m;
    if (model == "idg")
        e.model = PotentialModel::idg(ms_inverse_m());
    else if (model == "newtonian")
        e.model = PotentialModel::newtonian();
    else
        throw ConfigError("model must be 'newtonian' or 'idg', got '" + model + "'");
    e.validate();
    return e;
}

double RunConfig::ms_inverse_m() const { return ev_to_inverse_meters(ms_ev); }

void apply_config_json(const std::string& json_text, RunConfig& cfg) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw ConfigError("config must be a flat JSON object");
    auto number = [](const nlohmann::json& v, const std::string& key) {
        if (!v.is_number())
            throw ConfigError("config key '" + key + "' must be a number");
        return v.get<double>();
    };
    for (const auto& [key, value] : j.items()) {
        if (key == "mass_kg")
            cfg.mass_kg = number(value, key);
        else if (key == "tau_s")
            cfg.tau_s = number(value, key);
        else if (key == "d_m")
            cfg.d_m = number(value, key);
        else if (key == "delta_x_m")
            cfg.delta_x_m = number(value, key);
        else if (key == "ms_ev")
            cfg.ms_ev = number(value, key);
        else if (key == "model") {
            if (!value.is_string())
                throw ConfigError("config key 'model' must be a string");
            cfg.model = value.get<std::string>();
        } else if (key == "seed") {
            if (!value.is_number_unsigned())
                throw ConfigError("config key 'seed' must be a non-negative integer");
            cfg.seed = value.get<std::uint64_t>();
        } else
            throw ConfigError("unknown config key '" + key + "'");
    }
}

void load_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot read config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    apply_config_json(buf.str(), cfg);
}

std::string format_sci(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.8e", x);
    return buf;
}

void write_potential_csv(const std::vector<PotentialRow>& rows, std::ostream& out) {
    out << "r_m,phi_newton_J_per_kg,phi_idg_J_per_kg\n";
    for (const auto& r : rows)
        out << format_sci(r.r_m) << ',' << format_sci(r.phi_newton) << ',' << format_sci(r.phi_idg) << '\n';
}

void write_entropy_csv(const std::vector<EntropyRow>& rows, std::ostream& out) {
    out << "min_sep_m,S_newton_bits,S_idg_bits\n";
    for (const auto& r : rows)
        out << format_sci(r.min_sep_m) << ',' << format_sci(r.s_newton) << ',' << format_sci(r.s_idg) << '\n';
}

namespace {

// Writes to --out when given, else to `out`.
int emit(const RunConfig& cfg, std::ostream& out, std::ostream& err,
         const std::function<void(std::ostream&)>& writer) {
    if (cfg.out_path.empty()) {
        writer(out);
        return kSuccess;
    }
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) {
        err << "error: cannot open output file '" << cfg.out_path << "'\n";
        return kValidationError;
    }
    writer(file);
    file.flush();
    if (!file) {
        err << "error: failed writing '" << cfg.out_path << "'\n";
        return kValidationError;
    }
    return kSuccess;
}

std::vector<double> sweep_grid(const RunConfig& cfg, double lo, double hi, std::size_t points, bool log_default) {
    lo = cfg.sweep_min.value_or(lo);
    hi = cfg.sweep_max.value_or(hi);
    points = cfg.points.value_or(points);
    const bool use_log = cfg.log_scale || (log_default && !cfg.linear_scale);
    return use_log ? log_grid(lo, hi, points) : linear_grid(lo, hi, points);
}

} // namespace

int cmd_potential(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto radii = sweep_grid(cfg, 1e-6, 1e-3, 100, true);
    const auto rows = potential_sweep(radii, cfg.mass_kg, cfg.ms_inverse_m(), cfg.exec);
    return emit(cfg, out, err, [&](std::ostream& os) { write_potential_csv(rows, os); });
}

int cmd_evolve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const ExperimentConfig exp = cfg.experiment();
    const DeltaPhases dp = delta_phases(exp);
    const double residual = residual_entangling_phase(exp);
    const DensityMatrix4 rho = density_matrix(evolve(exp));
    const double s_closed = entropy_closed_form(exp);
    const double s_numeric = von_neumann_entropy(partial_trace_B(rho));
    const double c = concurrence(rho);
    const double w_fixed = witness_fixed_frame(rho);
    const double w_opt = witness_optimized(rho);
    const double neg = negativity(rho);

    out << "model: " << exp.model.name() << '\n'
        << "mass_kg: " << format_sci(exp.mass_kg) << '\n'
        << "tau_s: " << format_sci(exp.tau_s) << '\n'
        << "d_m: " << format_sci(exp.d_m) << '\n'
        << "delta_x_m: " << format_sci(exp.delta_x_m) << '\n'
        << "min_separation_m: " << format_sci(exp.min_separation()) << '\n'
        << "delta_phi_LR_rad: " << format_sci(dp.lr) << '\n'
        << "delta_phi_RL_rad: " << format_sci(dp.rl) << '\n'
        << "residual_phase_rad: " << format_sci(residual) << '\n'
        << "entropy_closed_form_bits: " << format_sci(s_closed) << '\n'
        << "entropy_numeric_bits: " << format_sci(s_numeric) << '\n'
        << "concurrence: " << format_sci(c) << '\n'
        << "witness_fixed_frame: " << format_sci(w_fixed) << '\n'
        << "witness_optimized: " << format_sci(w_opt) << '\n'
        << "negativity: " << format_sci(neg) << '\n';

    if (cfg.out_path.empty())
        return kSuccess;
    return emit(cfg, out, err, [&](std::ostream& os) {
        os << "model,delta_phi_LR_rad,delta_phi_RL_rad,residual_phase_rad,entropy_closed_form_bits,"
              "entropy_numeric_bits,concurrence,witness_fixed_frame,witness_optimized,negativity\n";
        os << exp.model.name();
        for (double v : {dp.lr, dp.rl, residual, s_closed, s_numeric, c, w_fixed, w_opt, neg})
            os << ',' << format_sci(v);
        os << '\n';
    });
}

int cmd_entropy_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    RunConfig base_cfg = cfg;
    base_cfg.model = "newtonian";
    const ExperimentConfig base = base_cfg.experiment();
    const auto seps = sweep_grid(cfg, 1.5e-4, 1e-3, 50, false);
    const auto rows = entropy_sweep(seps, base, cfg.ms_inverse_m(), cfg.exec);
    return emit(cfg, out, err, [&](std::ostream& os) { write_entropy_csv(rows, os); });
}

int cmd_locc_mc(const RunConfig& cfg, std::uint64_t n_channels, std::uint64_t collapse_samples,
                std::ostream& out, std::ostream&) {
    const ExperimentConfig exp = cfg.experiment();
    const SeparabilityReport report = monte_carlo_separability(n_channels, cfg.seed, cfg.exec);

    const DensityMatrix4 semi = semiclassical_evolution(exp);
    const DensityMatrix4 collapse = stochastic_collapse_evolution(exp, collapse_samples, cfg.seed);
    const DensityMatrix4 quantum = density_matrix(evolve(exp));

    const double semi_neg = negativity(semi);
    const double semi_wit = witness_optimized(semi);
    const double col_neg = negativity(collapse);
    const double col_wit = witness_optimized(collapse);
    const bool models_ok = semi_neg <= kSeparableNegativityTol && col_neg <= kSeparableNegativityTol &&
                           semi_wit <= 1.0 + kSeparableWitnessTol && col_wit <= 1.0 + kSeparableWitnessTol;
    const bool passed = report.passed && models_ok;

    out << "channels: " << report.channels << '\n'
        << "seed: " << cfg.seed << '\n'
        << "random_locc max_negativity: " << format_sci(report.max_negativity) << '\n'
        << "random_locc max_witness_optimized: " << format_sci(report.max_witness) << '\n'
        << "semiclassical negativity: " << format_sci(semi_neg) << " witness_optimized: " << format_sci(semi_wit)
        << '\n'
        << "stochastic_collapse samples: " << collapse_samples << " negativity: " << format_sci(col_neg)
        << " witness_optimized: " << format_sci(col_wit) << '\n'
        << "quantum_baseline (" << exp.model.name() << ") negativity: " << format_sci(negativity(quantum))
        << " witness_optimized: " << format_sci(witness_optimized(quantum)) << '\n'
        << "result: " << (passed ? "PASS" : "FAIL") << '\n';
    return passed ? kSuccess : kPropertyFailure;
}

int cmd_propagator_verify(const RunConfig& cfg, std::size_t k_samples, std::size_t dim, std::ostream& out,
                          std::ostream&) {
    if (k_samples < 1)
        throw ConfigError("k-samples must be >= 1");
    if (dim < 3)
        throw ConfigError("dimension must be >= 3");
    std::mt19937_64 rng(cfg.seed);
    const double ms = cfg.ms_inverse_m();
    const PotentialModel idg = PotentialModel::idg(ms);

    ProjectorAlgebraResiduals algebra;
    double constraints = 0.0;
    double sectors = 0.0;
    double static_limit = 0.0;
    const double dd = static_cast<double>(dim);
    const double static_expected = (dd - 3.0) / (dd - 2.0);
    std::uniform_real_distribution<double> log_mag(-2.0, 2.0);
    for (std::size_t i = 0; i < k_samples; ++i) {
        const Momentum k = random_off_shell_momentum(rng, dim);
        const auto r = projector_algebra_residuals(k);
        algebra.idempotency = std::max(algebra.idempotency, r.idempotency);
        algebra.orthogonality = std::max(algebra.orthogonality, r.orthogonality);
        algebra.mixing = std::max(algebra.mixing, r.mixing);
        algebra.completeness = std::max(algebra.completeness, r.completeness);
        algebra.symmetry = std::max(algebra.symmetry, r.symmetry);

        const Momentum scaled = [&] {
            std::vector<double> c(dim);
            for (std::size_t mu = 0; mu < dim; ++mu)
                c[mu] = k.upper(mu) * ms;
            return Momentum(std::move(c));
        }();
        for (const PotentialModel& model : {PotentialModel::newtonian(), idg}) {
            const FormFactors ff = form_factors(model, scaled.square());
            constraints = std::max(constraints, constraint_residuals(ff).max_abs());
            const SectorCoefficients sc = sector_coefficients(ff, scaled);
            sectors = std::max({sectors, std::abs(sc.spin1), std::abs(sc.mixing), std::abs(sc.spin0_w)});
        }

        const double kmag = std::pow(10.0, log_mag(rng));
        const Momentum s = Momentum::static_along_last_axis(kmag, dim);
        const FormFactors gr = form_factors(PotentialModel::newtonian(), s.square());
        static_limit =
            std::max(static_limit, std::abs(kmag * kmag * saturated_propagator_entry(gr, s, 0, 0, 0, 0) - static_expected));
    }

    const auto radii = log_grid(1e-6, 1e-2, 50);
    const auto q_newton = quadrature_agreement(radii, PotentialModel::newtonian(), cfg.mass_kg, cfg.exec);
    const auto q_idg = quadrature_agreement(radii, idg, cfg.mass_kg, cfg.exec);

    const bool ok = algebra.max() < 1e-12 && constraints < 1e-12 && sectors < 1e-12 && static_limit < 1e-12 &&
                    q_newton.max_relative_error < 1e-6 && q_idg.max_relative_error < 1e-6;

    out << "dimension: " << dim << '\n'
        << "k_samples: " << k_samples << '\n'
        << "seed: " << cfg.seed << '\n'
        << "idempotency: " << format_sci(algebra.idempotency) << '\n'
        << "orthogonality: " << format_sci(algebra.orthogonality) << '\n'
        << "mixing: " << format_sci(algebra.mixing) << '\n'
        << "completeness: " << format_sci(algebra.completeness) << '\n'
        << "symmetry: " << format_sci(algebra.symmetry) << '\n'
        << "bianchi_constraints: " << format_sci(constraints) << '\n'
        << "vanishing_sectors: " << format_sci(sectors) << '\n'
        << "static_limit k^2 Pi_0000 - " << format_sci(static_expected) << ": " << format_sci(static_limit) << '\n'
        << "quadrature_rel_error newtonian: " << format_sci(q_newton.max_relative_error) << '\n'
        << "quadrature_rel_error idg: " << format_sci(q_idg.max_relative_error) << '\n'
        << "result: " << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? kSuccess : kPropertyFailure;
}

int cmd_convert(std::optional<double> energy_ev, std::optional<double> length_m, std::ostream& out,
                std::ostream& err) {
    if (energy_ev.has_value() == length_m.has_value()) {
        err << "error: convert needs exactly one of --ev or --m\n";
        return kValidationError;
    }
    if (energy_ev) {
        out << "energy_ev: " << format_sci(*energy_ev) << '\n'
            << "inverse_m: " << format_sci(ev_to_inverse_meters(*energy_ev)) << '\n'
            << "length_m: " << format_sci(ev_to_length(*energy_ev)) << '\n';
    } else {
        if (!(*length_m > 0.0))
            throw DomainError("length must be positive");
        // hbar c / E = L  <=>  E = hbar c / L
        const double e = kCodata.hbar_c / *length_m;
        out << "length_m: " << format_sci(*length_m) << '\n'
            << "energy_ev: " << format_sci(e) << '\n'
            << "inverse_m: " << format_sci(1.0 / *length_m) << '\n';
    }
    return kSuccess;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Gravitationally induced entanglement simulator"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path;
    std::optional<std::string> model;
    std::optional<double> ms_ev, mass, tau, d, dx;
    std::optional<std::uint64_t> seed;
    bool serial = false;

    auto add_physics = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "Flat JSON config file");
        sub->add_option("--model", model, "Gravitational model")->check(CLI::IsMember({"newtonian", "idg"}));
        sub->add_option("--ms-ev", ms_ev, "Non-locality scale M_s in eV");
        sub->add_option("--mass-kg", mass, "Test mass (kg)");
        sub->add_option("--tau-s", tau, "Interaction time (s)");
        sub->add_option("--d-m", d, "Arm-to-arm distance d (m); minimum separation is d - dx");
        sub->add_option("--delta-x-m", dx, "Superposition size dx (m)");
        sub->add_option("--seed", seed, "RNG seed");
        sub->add_flag("--serial", serial, "Use the serial reference kernels");
    };
    auto add_sweep = [&](CLI::App* sub) {
        sub->add_option("--out", cfg.out_path, "Output path (default stdout)");
        sub->add_option("--points", cfg.points, "Grid points (>= 2)");
        sub->add_option("--min", cfg.sweep_min, "Sweep lower bound (m)");
        sub->add_option("--max", cfg.sweep_max, "Sweep upper bound (m)");
        sub->add_flag("--log", cfg.log_scale, "Log-spaced grid");
        sub->add_flag("--linear", cfg.linear_scale, "Linearly spaced grid");
    };

    auto* potential = app.add_subcommand("potential", "Newtonian vs IDG potential per unit test mass (CSV)");
    add_physics(potential);
    add_sweep(potential);

    auto* evolve_cmd = app.add_subcommand("evolve", "Phases and entanglement measures for one configuration");
    add_physics(evolve_cmd);
    evolve_cmd->add_option("--out", cfg.out_path, "Also write a one-row CSV here");

    auto* sweep = app.add_subcommand("entropy-sweep", "Entropy vs minimum separation for both models (CSV)");
    add_physics(sweep);
    add_sweep(sweep);

    std::uint64_t n_channels = 10000;
    std::uint64_t collapse_samples = 100000;
    auto* locc = app.add_subcommand("locc-mc", "Monte Carlo check that classical channels never entangle");
    add_physics(locc);
    locc->add_option("--n", n_channels, "Number of random LOCC channels")->check(CLI::PositiveNumber);
    locc->add_option("--collapse-samples", collapse_samples, "Samples for the stochastic-collapse model")
        ->check(CLI::PositiveNumber);

    std::size_t k_samples = 100;
    std::size_t dim = 4;
    auto* verify = app.add_subcommand("propagator-verify", "Projector algebra and propagator checks");
    add_physics(verify);
    verify->add_option("--k-samples", k_samples, "Random momenta")->check(CLI::PositiveNumber);
    verify->add_option("--dim", dim, "Spacetime dimension D")->check(CLI::Range(3, 12));

    std::optional<double> conv_ev, conv_m;
    auto* convert = app.add_subcommand("convert", "eV <-> meters");
    convert->add_option("--ev", conv_ev, "Energy in eV");
    convert->add_option("--m", conv_m, "Length in meters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        // CLI11 prints usage through app.exit; map all parse failures to 1.
        app.exit(e, out, err);
        return kValidationError;
    }

    try {
        if (!config_path.empty())
            load_config_file(config_path, cfg);
        if (model)
            cfg.model = *model;
        if (ms_ev)
            cfg.ms_ev = *ms_ev;
        if (mass)
            cfg.mass_kg = *mass;
        if (tau)
            cfg.tau_s = *tau;
        if (d)
            cfg.d_m = *d;
        if (dx)
            cfg.delta_x_m = *dx;
        if (seed)
            cfg.seed = *seed;
        cfg.exec = serial ? Execution::Serial : Execution::Parallel;
        if (cfg.log_scale && cfg.linear_scale)
            throw ConfigError("--log and --linear are mutually exclusive");

        if (*potential)
            return cmd_potential(cfg, out, err);
        if (*evolve_cmd)
            return cmd_evolve(cfg, out, err);
        if (*sweep)
            return cmd_entropy_sweep(cfg, out, err);
        if (*locc)
            return cmd_locc_mc(cfg, n_channels, collapse_samples, out, err);
        if (*verify)
            return cmd_propagator_verify(cfg, k_samples, dim, out, err);
        return cmd_convert(conv_ev, conv_m, out, err);
    } catch (const QuadratureError& e) {
        err << "error: " << e.what() << '\n';
        return kPropertyFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kValidationError;
    }
}

} // namespace gie::cli
