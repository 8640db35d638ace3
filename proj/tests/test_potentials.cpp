#include "gie/errors.hpp"
#include "gie/potentials.hpp"
#include "gie/units.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

using namespace gie;

namespace {
constexpr double kMass = 1e-14;
}

TEST_CASE("erf agrees with the frozen value and with std::erf") {
    CHECK(gie::erf(0.0) == 0.0);
    CHECK(std::abs(gie::erf(6.0) - 1.0) <= 1e-15);
    CHECK(std::abs(gie::erf(2.027) - oracle::kErf2027) < 1e-15);
    double worst = 0.0;
    for (double x = -8.0; x <= 8.0; x += 1.0 / 512.0)
        worst = std::max(worst, std::abs(gie::erf(x) - std::erf(x)));
    CHECK(worst < 1e-14);
}

TEST_CASE("erf is odd, monotone and bounded") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-7.0, 7.0);
    for (int i = 0; i < 2000; ++i) {
        const double x = u(rng);
        CHECK(gie::erf(-x) == -gie::erf(x));
        CHECK(std::abs(gie::erf(x)) <= 1.0);
    }
    double prev = gie::erf(-7.0);
    for (double x = -7.0; x <= 7.0; x += 1e-3) {
        const double v = gie::erf(x);
        CHECK(v >= prev);
        prev = v;
    }
    // Branch switch points stay continuous.
    CHECK(std::abs(gie::erf(std::nextafter(3.0, 0.0)) - gie::erf(3.0)) < 1e-15);
    CHECK(std::abs(gie::erf(std::nextafter(6.5, 0.0)) - gie::erf(6.5)) < 1e-15);
}

TEST_CASE("erf rejects NaN") {
    CHECK_THROWS_AS(gie::erf(std::numeric_limits<double>::quiet_NaN()), DomainError);
    CHECK(gie::erf(std::numeric_limits<double>::infinity()) == 1.0);
}

TEST_CASE("Newtonian potential") {
    const auto n = PotentialModel::newtonian();
    CHECK(potential_per_unit_mass(n, 2e-4, kMass) == doctest::Approx(oracle::kPhiNewton2e4).epsilon(1e-14));
    CHECK_THROWS_AS(potential_per_unit_mass(n, 0.0, kMass), DomainError);
    CHECK_THROWS_AS(potential_per_unit_mass(n, -1e-3, kMass), DomainError);
    CHECK_THROWS_AS(potential_per_unit_mass(n, 1e-3, -kMass), DomainError);
}

TEST_CASE("IDG potential recovers Newton at large M_s r") {
    const double r = 2e-4;
    const auto idg = PotentialModel::idg(20.0 / r);
    const double newton = potential_per_unit_mass(PotentialModel::newtonian(), r, kMass);
    CHECK(std::abs(potential_per_unit_mass(idg, r, kMass) / newton - 1.0) < 1e-6);
}

TEST_CASE("IDG plateau") {
    const double ms = oracle::kMsInverseM;
    CHECK(idg_plateau(kMass, ms) == doctest::Approx(oracle::kPlateau).epsilon(1e-14));
    CHECK(idg_plateau(0.0, ms) == 0.0);
    CHECK(idg_plateau(kMass, 2.0 * ms) == doctest::Approx(2.0 * oracle::kPlateau).epsilon(1e-14));
    const auto idg = PotentialModel::idg(ms);
    CHECK(potential_per_unit_mass(idg, 1e-12, kMass) == doctest::Approx(oracle::kPlateau).epsilon(1e-12));
    CHECK(potential_per_unit_mass(idg, 1e-300, kMass) == doctest::Approx(oracle::kPlateau).epsilon(1e-14));
}

TEST_CASE("IDG model requires a positive scale") {
    CHECK_THROWS_AS(PotentialModel::idg(0.0), ConfigError);
    CHECK_THROWS_AS(PotentialModel::idg(-1.0), ConfigError);
    CHECK(PotentialModel::idg(3.0).ms() == 3.0);
    CHECK(PotentialModel::newtonian().name() == "newtonian");
    CHECK(PotentialModel::idg(3.0).name() == "idg");
}

TEST_CASE("potential ratio is erf and IDG is weaker") {
    const double ms = oracle::kMsInverseM;
    const auto idg = PotentialModel::idg(ms);
    const auto newton = PotentialModel::newtonian();
    for (double r = 1e-7; r < 1e-1; r *= 1.3) {
        const double pi = potential_per_unit_mass(idg, r, kMass);
        const double pn = potential_per_unit_mass(newton, r, kMass);
        CHECK(pi < 0.0);
        CHECK(pn < 0.0);
        CHECK(std::abs(pi) <= std::abs(pn));
        const double ratio = pi / pn;
        CHECK(ratio > 0.0);
        CHECK(ratio <= 1.0);
        CHECK(std::abs(ratio - gie::erf(ms * r / 2.0)) < 1e-14);
        if (r > 4.0 / ms)
            CHECK(std::abs(pi - pn) < 1e-2 * std::abs(pn));
    }
}

TEST_CASE("linearity check") {
    const auto n = PotentialModel::newtonian();
    CHECK(linearity_check(n, 2e-4, kMass));
    CHECK_FALSE(linearity_check(n, 1e3, 1.98847e30));
    CHECK(linearity_check(n, 1e-3, 0.0));
    CHECK(linearity_check(PotentialModel::idg(oracle::kMsInverseM), 1e-9, kMass));
}

TEST_CASE("smeared delta") {
    const double alpha = 2.5e-3;
    CHECK(smeared_delta(0.0, alpha) == doctest::Approx(1.0 / std::sqrt(2.0 * alpha)));
    for (double x : {1e-3, 0.05, 0.3})
        CHECK(smeared_delta(x, alpha) == smeared_delta(-x, alpha));
    CHECK_THROWS_AS(smeared_delta(0.0, 0.0), DomainError);
    CHECK_THROWS_AS(smeared_delta(0.0, -1.0), DomainError);

    // Trapezoid over +-20 sigma.
    const double width = 40.0 * std::sqrt(2.0 * alpha);
    const int n = 20000;
    const double h = width / n;
    double sum = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double w = (i == 0 || i == n) ? 0.5 : 1.0;
        sum += w * smeared_delta(-width / 2.0 + i * h, alpha);
    }
    CHECK(sum * h == doctest::Approx(std::sqrt(2.0 * std::numbers::pi)).epsilon(1e-12));
}
