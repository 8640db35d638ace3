#include "gie/potentials.hpp"

#include "gie/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace gie {

PotentialModel PotentialModel::idg(double ms_inverse_m) {
    if (!(ms_inverse_m > 0.0) || !std::isfinite(ms_inverse_m))
        throw ConfigError("IDG model requires a positive, finite M_s");
    return PotentialModel(Kind::Idg, ms_inverse_m);
}

namespace {

constexpr double kTwoOverSqrtPi = 2.0 * std::numbers::inv_sqrtpi;
constexpr double kSeriesCutoff = 3.0;

// erf(x) = 2/sqrt(pi) exp(-x^2) sum_n (2x^2)^n x / (2n+1)!!
// Every term is positive, so there is no cancellation for x < 3.
double erf_series(double x) {
    const double two_x2 = 2.0 * x * x;
    double term = x;
    double sum = x;
    for (int n = 1; n < 200; ++n) {
        term *= two_x2 / (2.0 * n + 1.0);
        sum += term;
        if (term < sum * 1e-17)
            break;
    }
    return kTwoOverSqrtPi * std::exp(-x * x) * sum;
}

// erfc(x) = exp(-x^2)/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
// evaluated with the modified Lentz algorithm. Used for x >= 3.
double erfc_continued_fraction(double x) {
    constexpr double tiny = 1e-300;
    double f = x;
    double c = x;
    double d = 0.0;
    for (int n = 1; n < 500; ++n) {
        const double a = 0.5 * n;
        d = x + a * d;
        if (std::abs(d) < tiny)
            d = tiny;
        c = x + a / c;
        if (std::abs(c) < tiny)
            c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16)
            break;
    }
    return std::exp(-x * x) / f * std::numbers::inv_sqrtpi;
}

} // namespace

double erf(double x) {
    if (std::isnan(x))
        throw DomainError("erf: NaN argument");
    if (x < 0.0)
        return -erf(-x);
    if (x < kSeriesCutoff)
        return erf_series(x);
    if (x > 6.5)
        return 1.0;
    return 1.0 - erfc_continued_fraction(x);
}

double potential_per_unit_mass(const PotentialModel& model, double r, double m_source,
                               const PhysicalConstants& k) {
    if (!(r > 0.0))
        throw DomainError("potential: distance must be positive");
    if (!(m_source >= 0.0))
        throw DomainError("potential: source mass must be non-negative");
    const double newton = -k.G * m_source / r;
    if (!model.is_idg())
        return newton;
    return newton * erf(0.5 * model.ms() * r);
}

double idg_plateau(double m_source, double ms_inverse_m, const PhysicalConstants& k) {
    if (!(m_source >= 0.0) || !(ms_inverse_m > 0.0))
        throw DomainError("idg_plateau: mass must be >= 0 and M_s > 0");
    return -k.G * m_source * ms_inverse_m * std::numbers::inv_sqrtpi;
}

bool linearity_check(const PotentialModel& model, double r, double m_source,
                     const PhysicalConstants& k) {
    const double phi = potential_per_unit_mass(model, r, m_source, k);
    return 2.0 * std::abs(phi) / (k.c * k.c) < 1.0;
}

double smeared_delta(double x, double alpha) {
    if (!(alpha > 0.0))
        throw DomainError("smeared_delta: alpha must be positive");
    return std::exp(-x * x / (4.0 * alpha)) / std::sqrt(2.0 * alpha);
}

} // namespace gie
