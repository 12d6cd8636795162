#pragma once

#include <cmath>
#include <numbers>
#include <optional>

#include "cavmode/damping.hpp"
#include "cavmode/errors.hpp"
#include "cavmode/mode.hpp"

namespace cavmode {

/// Free energy of the uncoupled oscillator mode at temperature T (energy
/// units, hbar = k_B = 1):  T ln[2 sinh(Omega / 2T)], i.e. the summed
/// geometric series Omega/2 + T ln(1 - e^(-Omega/T)), which neither
/// overflows at low T nor loses the zero-point term.
inline double free_energy_bare(double omega_inf, double temperature) {
    if (!(omega_inf > 0.0))
        throw DomainError("free_energy_bare: omega_inf must be > 0");
    if (temperature < 0.0)
        throw DomainError("free_energy_bare: temperature must be >= 0");
    if (temperature == 0.0)
        return 0.5 * omega_inf;
    return 0.5 * omega_inf +
           temperature * std::log(-std::expm1(-omega_inf / temperature));
}

/// Result of the Matsubara evaluation of the interaction free energy.
struct FreeEnergyResult {
    double f_bare = 0.0;
    double f_shift = 0.0;                     ///< real part when unstable
    bool is_stable = true;
    std::optional<double> instability_strength;  ///< omega_0^2 = Pi(0) - Omega_inf^2
    long matsubara_terms_used = 0;
    double truncation_error_estimate = 0.0;
};

/// Casimir free-energy shift of the damped mode at temperature T > 0,
///
///   f1 = (T/2) Sum_n ln[1 - Pi(i|w_n|) / (Omega_inf^2 + w_n^2)],
///   w_n = 2 pi n T,
///
/// summed over n = 0, +-1, +-2, ... with the symmetric pair folded into a
/// factor 2.  The truncation tail is bounded through the monotone decay of
/// Pi(i y) and an integral comparison; the returned estimate is kept below
/// rel_tol * |f1|.  A non-positive logarithm argument marks the static
/// instability: the real part is returned with is_stable = false.
inline FreeEnergyResult casimir_shift(const CavityMode& mode, const DampingModel& model,
                                      double temperature, double rel_tol = 1e-8,
                                      long max_terms = 1'000'000) {
    if (!(temperature > 0.0))
        throw DomainError("casimir_shift: temperature must be > 0");

    const double w_inf_sq = mode.bare_frequency_squared();
    const double w1 = 2.0 * std::numbers::pi * temperature;  // Matsubara spacing

    FreeEnergyResult result;
    result.f_bare = free_energy_bare(mode.bare_frequency(), temperature);

    auto log_term = [&](long n) {
        const double wn = w1 * static_cast<double>(n);
        const double x = model.pi_imag_axis(wn) / (w_inf_sq + wn * wn);
        if (x >= 1.0) {
            result.is_stable = false;
            return std::log(std::abs(1.0 - x));  // real part of the complex log
        }
        return std::log1p(-x);
    };

    const double pi0 = model.pi_zero();
    if (pi0 >= w_inf_sq) {
        result.is_stable = false;
        result.instability_strength = pi0 - w_inf_sq;
    }

    double sum = log_term(0);
    long n = 0;
    while (true) {
        // grow in blocks, checking the tail bound as we go
        const long block = std::max<long>(16, n / 2);
        for (long i = 0; i < block && n < max_terms; ++i) {
            ++n;
            sum += 2.0 * log_term(n);
        }

        const double f1 = 0.5 * temperature * sum;
        // |ln(1-x)| <= 2x for x <= 1/2 and Pi(iy) decays monotonically, so
        //   tail <= T * Sum_{m>n} Pi(i w_m)/w_m^2 <= T * Pi(i w_{n+1})/(w1^2 n)
        const double tail = 2.0 * temperature *
                            model.pi_imag_axis(w1 * static_cast<double>(n + 1)) /
                            (w1 * w1 * static_cast<double>(n));
        result.truncation_error_estimate = tail;
        if (tail <= rel_tol * std::max(std::abs(f1), 1e-300)) {
            result.f_shift = f1;
            break;
        }
        if (n >= max_terms)
            throw TruncationError("casimir_shift: term cap reached before tolerance");
    }
    result.matsubara_terms_used = n + 1;  // n = 0 plus the folded pairs
    return result;
}

/// Stability classification of the static mode (stable iff Pi(0) < Omega_inf^2).
struct StabilityVerdict {
    enum class Kind { stable, marginal, unstable };
    Kind kind = Kind::stable;
    /// omega_0 = sqrt(Pi(0) - Omega_inf^2), present only when unstable.
    std::optional<double> omega0;

    bool is_stable() const noexcept { return kind == Kind::stable; }
    bool is_marginal() const noexcept { return kind == Kind::marginal; }
    bool is_unstable() const noexcept { return kind == Kind::unstable; }
};

inline StabilityVerdict stability_verdict(const CavityMode& mode,
                                          const DampingModel& model) {
    const double w_inf_sq = mode.bare_frequency_squared();
    const double pi0 = model.pi_zero();

    StabilityVerdict v;
    if (std::abs(pi0 - w_inf_sq) <= 1e-12 * w_inf_sq) {
        v.kind = StabilityVerdict::Kind::marginal;
    } else if (pi0 < w_inf_sq) {
        v.kind = StabilityVerdict::Kind::stable;
    } else {
        v.kind = StabilityVerdict::Kind::unstable;
        v.omega0 = std::sqrt(pi0 - w_inf_sq);
    }
    return v;
}

/// Double-well effective potential restoring stability beyond the harmonic
/// order,
///
///   V(Phi) = (C omega_0^2 / 4 Phi_0^2 c^2) (Phi^2 - Phi_0^2)^2 ,
///
/// with minima at +-Phi_0 and curvature frequency sqrt(2) omega_0 there.
struct QuarticWell {
    double omega0 = 0.0;
    double phi0 = 0.0;
    double capacitance = 0.0;
    double light_speed = 1.0;
    double small_oscillation_frequency = 0.0;
    double barrier_height = 0.0;   ///< V(0)

    double minimum_plus() const noexcept { return phi0; }
    double minimum_minus() const noexcept { return -phi0; }

    double potential(double phi) const noexcept {
        const double q = phi * phi - phi0 * phi0;
        return capacitance * omega0 * omega0 /
               (4.0 * phi0 * phi0 * light_speed * light_speed) * q * q;
    }
};

inline QuarticWell quartic_well(double omega0, double phi0, double capacitance,
                                double light_speed = 1.0) {
    if (!(omega0 > 0.0) || !(phi0 > 0.0) || !(capacitance > 0.0) || !(light_speed > 0.0))
        throw DomainError("quartic_well: omega0, phi0, capacitance, c must be > 0");
    QuarticWell w;
    w.omega0 = omega0;
    w.phi0 = phi0;
    w.capacitance = capacitance;
    w.light_speed = light_speed;
    w.small_oscillation_frequency = std::numbers::sqrt2 * omega0;
    w.barrier_height = capacitance * omega0 * omega0 * phi0 * phi0 /
                       (4.0 * light_speed * light_speed);
    return w;
}

} // namespace cavmode
