#pragma once

#include <cmath>

#include "cavmode/errors.hpp"

namespace cavmode {

/// Unit convention for the library boundary.
///
/// Internally every routine works in natural units (hbar = k_B = c = 1):
/// frequencies in rad/time, temperatures and energies share the same unit,
/// lengths are times.  A UnitSystem carries the three scales needed to move
/// numbers between that convention and an external one (typically SI).
class UnitSystem {
public:
    UnitSystem(double hbar, double k_boltzmann, double light_speed)
        : hbar_(hbar), k_boltzmann_(k_boltzmann), light_speed_(light_speed) {
        if (!(hbar > 0.0) || !(k_boltzmann > 0.0) || !(light_speed > 0.0))
            throw DomainError("UnitSystem scales must be strictly positive");
    }

    /// hbar = k_B = c = 1.
    static UnitSystem natural() { return UnitSystem(1.0, 1.0, 1.0); }

    /// SI values (J*s, J/K, m/s).
    static UnitSystem si() {
        return UnitSystem(1.054571817e-34, 1.380649e-23, 2.99792458e8);
    }

    double hbar() const noexcept { return hbar_; }
    double k_boltzmann() const noexcept { return k_boltzmann_; }
    double light_speed() const noexcept { return light_speed_; }

    // Internal temperatures are frequency-equivalents k_B T / hbar.
    double temperature_to_internal(double t) const noexcept {
        return k_boltzmann_ * t / hbar_;
    }
    double temperature_from_internal(double t) const noexcept {
        return hbar_ * t / k_boltzmann_;
    }

    // Internal energies are frequencies E / hbar.
    double energy_to_internal(double e) const noexcept { return e / hbar_; }
    double energy_from_internal(double e) const noexcept { return e * hbar_; }

    // Internal lengths are light travel times L / c.
    double length_to_internal(double l) const noexcept { return l / light_speed_; }
    double length_from_internal(double l) const noexcept { return l * light_speed_; }

    // Angular frequencies (rad/time) and times pass through unchanged.
    double frequency_to_internal(double w) const noexcept { return w; }
    double frequency_from_internal(double w) const noexcept { return w; }

private:
    double hbar_;
    double k_boltzmann_;
    double light_speed_;
};

} // namespace cavmode
