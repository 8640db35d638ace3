#pragma once

namespace gie {

// SI constants (CODATA 2018). hbar_c is in eV*m.
struct PhysicalConstants {
    double G = 6.67430e-11;
    double hbar = 1.054571817e-34;
    double c = 2.99792458e8;
    double hbar_c = 1.97326980e-7;
};

inline constexpr PhysicalConstants kCodata{};

// Energy scale (eV) to wavenumber (1/m): E / (hbar c).
double ev_to_inverse_meters(double energy_ev, const PhysicalConstants& k = kCodata);

// Energy scale (eV) to the corresponding length (m): hbar c / E.
double ev_to_length(double energy_ev, const PhysicalConstants& k = kCodata);

} // namespace gie
