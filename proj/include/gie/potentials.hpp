#pragma once

#include "gie/units.hpp"

#include <string>

namespace gie {

// Active gravitational law. The IDG variant carries the non-locality scale
// M_s in inverse meters; the potential is then -(G m / r) erf(M_s r / 2).
class PotentialModel {
public:
    enum class Kind { Newtonian, Idg };

    static PotentialModel newtonian() { return PotentialModel(Kind::Newtonian, 0.0); }
    static PotentialModel idg(double ms_inverse_m);

    Kind kind() const { return kind_; }
    bool is_idg() const { return kind_ == Kind::Idg; }
    // Non-locality scale in 1/m; zero for the Newtonian model.
    double ms() const { return ms_; }

    std::string name() const { return is_idg() ? "idg" : "newtonian"; }

    friend bool operator==(const PotentialModel&, const PotentialModel&) = default;

private:
    PotentialModel(Kind kind, double ms) : kind_(kind), ms_(ms) {}

    Kind kind_;
    double ms_;
};

// Error function, absolute error below 1e-14 on the whole real line.
// Throws DomainError for NaN.
double erf(double x);

// Gravitational potential per unit test mass (J/kg) at distance r from a
// source of mass m_source. Throws DomainError for r <= 0 or negative mass.
double potential_per_unit_mass(const PotentialModel& model, double r, double m_source,
                               const PhysicalConstants& k = kCodata);

// r -> 0 limit of the IDG potential: -G m M_s / sqrt(pi).
double idg_plateau(double m_source, double ms_inverse_m, const PhysicalConstants& k = kCodata);

// Weak-field condition 2 |Phi| / c^2 < 1.
bool linearity_check(const PotentialModel& model, double r, double m_source,
                     const PhysicalConstants& k = kCodata);

// exp(alpha d^2/dx^2) applied to delta(x), in the 1/sqrt(2 pi) Fourier
// convention: exp(-x^2 / (4 alpha)) / sqrt(2 alpha).
double smeared_delta(double x, double alpha);

} // namespace gie
