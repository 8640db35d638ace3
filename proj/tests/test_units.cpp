#include "gie/errors.hpp"
#include "gie/units.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace gie;

TEST_CASE("ev_to_inverse_meters matches frozen values") {
    CHECK(ev_to_inverse_meters(0.004) == doctest::Approx(oracle::kMsInverseM).epsilon(1e-14));
    CHECK(ev_to_inverse_meters(0.008) == doctest::Approx(oracle::kMsInverseM8meV).epsilon(1e-14));
    CHECK(ev_to_inverse_meters(kCodata.hbar_c) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("ev_to_length matches frozen values") {
    CHECK(ev_to_length(0.004) == doctest::Approx(oracle::kLength4meV).epsilon(1e-7));
    CHECK(ev_to_length(0.002) == doctest::Approx(oracle::kLength2meV).epsilon(1e-7));
    CHECK(ev_to_length(1.97326980e-7) == doctest::Approx(1.0).epsilon(1e-15));
    // Rounded non-local range 5e-5 m.
    CHECK(std::abs(ev_to_length(0.004) - 5e-5) / 5e-5 < 0.02);
}

TEST_CASE("length and wavenumber are reciprocal") {
    for (double e = 1e-9; e < 1e6; e *= 3.7)
        CHECK(std::abs(ev_to_length(e) * ev_to_inverse_meters(e) - 1.0) < 1e-15);
}

TEST_CASE("non-positive or non-finite energies are rejected") {
    CHECK_THROWS_AS(ev_to_inverse_meters(0.0), DomainError);
    CHECK_THROWS_AS(ev_to_inverse_meters(-1.0), DomainError);
    CHECK_THROWS_AS(ev_to_length(0.0), DomainError);
    CHECK_THROWS_AS(ev_to_length(std::numeric_limits<double>::quiet_NaN()), DomainError);
    CHECK_THROWS_AS(ev_to_length(std::numeric_limits<double>::infinity()), DomainError);
}
