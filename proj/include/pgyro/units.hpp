#pragma once

#include <stdexcept>

#include "pgyro/constants.hpp"

namespace pgyro {

/// Unit system for simulation inputs and outputs.
///
/// Dimensionless: lengths in units of a characteristic scale a, time in units
/// of 2 m a^2 / hbar. The kinetic term then carries coefficient 1.
///
/// PhysicalMeV: energies in meV, time in units of hbar/meV. Lengths are taken
/// in units of a = sqrt(hbar^2 / (2 m meV)) so the kinetic coefficient is
/// again 1 and the same dimensionless solver runs both parameter sets.
struct UnitSystem {
    enum class Kind { Dimensionless, PhysicalMeV };

    Kind kind = Kind::Dimensionless;
    double length_scale = 1.0; // a, meters; meaningful for Dimensionless only

    /// Seconds per simulation time unit for a given effective mass (kg).
    double time_unit_seconds(double mass_kg) const {
        if (kind == Kind::Dimensionless) {
            return 2.0 * mass_kg * length_scale * length_scale / constants::hbar;
        }
        return constants::hbar / constants::meV_joule;
    }

    /// Joules per simulation energy unit for a given effective mass (kg).
    double energy_unit_joules(double mass_kg) const {
        if (kind == Kind::Dimensionless) {
            return constants::hbar * constants::hbar /
                   (2.0 * mass_kg * length_scale * length_scale);
        }
        return constants::meV_joule;
    }

    bool operator==(const UnitSystem&) const = default;
};

/// dGPE coefficients in simulation units.
struct SimParams {
    double g = 0.0;     // interaction strength
    double gamma = 0.0; // loss rate
    double eta = 0.0;   // gain saturation
    UnitSystem units;

    void validate() const {
        if (gamma < 0.0) throw std::invalid_argument("SimParams: gamma < 0");
        if (eta < 0.0) throw std::invalid_argument("SimParams: eta < 0");
    }

    bool operator==(const SimParams&) const = default;
};

} // namespace pgyro
