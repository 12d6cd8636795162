#pragma once

#include <cmath>
#include <vector>

#include "cavmode/errors.hpp"

namespace cavmode {

/// Planck occupation N(T) = 1 / (e^{Omega_0/T} - 1); zero at T = 0.
/// Temperatures are in energy units (hbar = k_B = 1).
inline double planck_occupation(double temperature, double omega0) {
    if (!(omega0 > 0.0))
        throw DomainError("planck_occupation: omega0 must be > 0");
    if (temperature < 0.0)
        throw DomainError("planck_occupation: temperature must be >= 0");
    if (temperature == 0.0)
        return 0.0;
    return 1.0 / std::expm1(omega0 / temperature);
}

/// Inverse Planck law T(N) = Omega_0 / ln(1 + 1/N); zero at N = 0.
inline double planck_temperature(double occupation, double omega0) {
    if (!(omega0 > 0.0))
        throw DomainError("planck_temperature: omega0 must be > 0");
    if (occupation < 0.0)
        throw DomainError("planck_temperature: occupation must be >= 0");
    if (occupation == 0.0)
        return 0.0;
    return omega0 / std::log1p(1.0 / occupation);
}

/// Pair-creation noise temperature T* defined by R = e^{-Omega_0 / T*}.
inline double noise_temperature(double reflection, double omega0) {
    if (!(omega0 > 0.0))
        throw DomainError("noise_temperature: omega0 must be > 0");
    if (reflection < 0.0 || reflection >= 1.0)
        throw DomainError("noise_temperature: need 0 <= R < 1");
    if (reflection == 0.0)
        return 0.0;
    return omega0 / std::log(1.0 / reflection);
}

/// Heating of a thermal mode by one modulation event of reflection
/// probability R.
struct HeatingResult {
    double t_star = 0.0;        ///< pair-creation noise temperature
    double mean_pairs = 0.0;    ///< N_bar = R / (1 - R), vacuum yield
    double n_initial = 0.0;
    double n_final = 0.0;
    double t_initial = 0.0;
    double t_final = 0.0;         ///< exact inverse Planck of n_final
    double t_final_approx = 0.0;  ///< T* coth(Omega_0 / 2 T_i)
    bool approx_valid = false;    ///< T* >= 10 Omega_0
};

/// Mean occupations and temperatures after pulsing: N_f = (2 N_bar + 1) N_i
/// + N_bar, the exact final temperature from the inverse Planck law, and the
/// coth shortcut valid for Omega_0 << T*.
inline HeatingResult heat_cavity(double reflection, double omega0,
                                 double t_initial) {
    if (!(omega0 > 0.0))
        throw DomainError("heat_cavity: omega0 must be > 0");
    if (reflection < 0.0 || reflection >= 1.0)
        throw DomainError("heat_cavity: need 0 <= R < 1");
    if (t_initial < 0.0)
        throw DomainError("heat_cavity: t_initial must be >= 0");

    HeatingResult h;
    h.t_star = noise_temperature(reflection, omega0);
    h.mean_pairs = reflection / (1.0 - reflection);
    h.t_initial = t_initial;
    h.n_initial = planck_occupation(t_initial, omega0);
    h.n_final = (2.0 * h.mean_pairs + 1.0) * h.n_initial + h.mean_pairs;
    h.t_final = planck_temperature(h.n_final, omega0);
    // coth(inf) -> 1 at T_i = 0
    const double coth = t_initial == 0.0
                            ? 1.0
                            : 1.0 / std::tanh(0.5 * omega0 / t_initial);
    h.t_final_approx = h.t_star * coth;
    h.approx_valid = h.t_star >= 10.0 * omega0;
    return h;
}

/// One row of the radiation-enhancement curve.
struct EnhancementPoint {
    double kTi_over_E = 0.0;    ///< T_i / Omega_0
    double ratio_approx = 0.0;  ///< T_f_approx / T*
    double ratio_exact = 0.0;   ///< T_f / T*
};

/// Enhancement T_f / T* versus the initial temperature, both by the coth
/// approximation and by the exact occupation inversion.
inline std::vector<EnhancementPoint> enhancement_curve(double omega0, double t_star,
                                                       double ti_min, double ti_max,
                                                       int n_points) {
    if (!(omega0 > 0.0))
        throw DomainError("enhancement_curve: omega0 must be > 0");
    if (!(t_star > 0.0))
        throw DomainError("enhancement_curve: t_star must be > 0");
    if (ti_min < 0.0 || ti_max < ti_min)
        throw DomainError("enhancement_curve: need 0 <= ti_min <= ti_max");
    if (n_points < 2)
        throw DomainError("enhancement_curve: need at least 2 points");

    const double reflection = std::exp(-omega0 / t_star);
    std::vector<EnhancementPoint> curve;
    curve.reserve(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i) {
        const double ti =
            ti_min + (ti_max - ti_min) * i / static_cast<double>(n_points - 1);
        const HeatingResult h = heat_cavity(reflection, omega0, ti);
        curve.push_back({ti / omega0, h.t_final_approx / t_star, h.t_final / t_star});
    }
    return curve;
}

/// Noise temperature built up by a train of pulses,
/// T_1* = Omega_0 exp(n_p tau Gamma_1), with overflow saturation flagged
/// rather than thrown.
struct PulsedNoiseTemperature {
    double value = 0.0;
    bool saturated = false;   ///< exponent exceeded 700; value is clamped
};

inline PulsedNoiseTemperature pulsed_noise_temperature(long pulse_count, double period,
                                                       double net_rate, double omega0) {
    if (pulse_count < 0)
        throw DomainError("pulsed_noise_temperature: pulse count must be >= 0");
    if (!(period > 0.0))
        throw DomainError("pulsed_noise_temperature: period must be > 0");
    if (!(omega0 > 0.0))
        throw DomainError("pulsed_noise_temperature: omega0 must be > 0");

    const double exponent = static_cast<double>(pulse_count) * period * net_rate;
    PulsedNoiseTemperature r;
    if (exponent > 700.0) {
        r.saturated = true;
        r.value = omega0 * std::exp(700.0);
    } else {
        r.value = omega0 * std::exp(exponent);
    }
    return r;
}

} // namespace cavmode
