#include "gie/units.hpp"

#include "gie/errors.hpp"

#include <cmath>

namespace gie {

namespace {
void require_positive_energy(double energy_ev) {
    if (!(energy_ev > 0.0) || !std::isfinite(energy_ev))
        throw DomainError("energy must be positive and finite");
}
} // namespace

double ev_to_inverse_meters(double energy_ev, const PhysicalConstants& k) {
    require_positive_energy(energy_ev);
    return energy_ev / k.hbar_c;
}

double ev_to_length(double energy_ev, const PhysicalConstants& k) {
    require_positive_energy(energy_ev);
    return k.hbar_c / energy_ev;
}

} // namespace gie
