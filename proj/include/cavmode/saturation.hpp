#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "cavmode/errors.hpp"
#include "cavmode/ode.hpp"

namespace cavmode {

/// Quantum noise statistics of the pump coordinate driving the modulation.
///
/// Either the symmetrized density S_bar(2 Omega_0) is supplied directly, or
/// it follows from a single-relaxation (Debye) response
/// Im chi(w) = chi0 w tau_dag / (1 + (w tau_dag)^2) through the
/// fluctuation-dissipation theorem at pump temperature T_eta.  The
/// asymmetric densities satisfy detailed balance
/// S^- = e^{-2 Omega_0 / T_eta} S^+ with S_bar = (S^+ + S^-)/2.
class PumpNoiseModel {
public:
    enum class Kind { direct, debye };

    static PumpNoiseModel direct(double s_bar, double t_eta) {
        if (s_bar < 0.0)
            throw DomainError("PumpNoiseModel: S_bar must be >= 0");
        if (!(t_eta > 0.0))
            throw DomainError("PumpNoiseModel: T_eta must be > 0");
        PumpNoiseModel m;
        m.kind_ = Kind::direct;
        m.s_bar_ = s_bar;
        m.t_eta_ = t_eta;
        return m;
    }

    static PumpNoiseModel debye(double chi0, double tau_dagger, double t_eta) {
        if (chi0 < 0.0)
            throw DomainError("PumpNoiseModel: chi0 must be >= 0");
        if (!(tau_dagger > 0.0))
            throw DomainError("PumpNoiseModel: tau_dagger must be > 0");
        if (!(t_eta > 0.0))
            throw DomainError("PumpNoiseModel: T_eta must be > 0");
        PumpNoiseModel m;
        m.kind_ = Kind::debye;
        m.chi0_ = chi0;
        m.tau_dagger_ = tau_dagger;
        m.t_eta_ = t_eta;
        return m;
    }

    Kind kind() const noexcept { return kind_; }
    bool is_debye() const noexcept { return kind_ == Kind::debye; }
    double pump_temperature() const noexcept { return t_eta_; }
    double chi_zero() const noexcept { return chi0_; }
    double tau_dagger() const noexcept { return tau_dagger_; }

    /// Im chi(w + i0+) of the Debye response (Debye variant only).
    double im_chi(double omega) const {
        if (kind_ != Kind::debye)
            throw DomainError("im_chi: only defined for the Debye variant");
        const double x = omega * tau_dagger_;
        return chi0_ * x / (1.0 + x * x);
    }

    /// Symmetrized density S_bar(2 Omega_0): stored for the direct variant,
    /// from the fluctuation-dissipation theorem
    /// S_bar(w) = (1/2pi) coth(w / 2 T_eta) Im chi(w) for Debye.
    double symmetrized_density(double omega0) const {
        if (kind_ == Kind::direct)
            return s_bar_;
        const double w = 2.0 * omega0;
        return (1.0 / (2.0 * std::numbers::pi)) *
               (1.0 / std::tanh(0.5 * w / t_eta_)) * im_chi(w);
    }

    /// Asymmetric densities at 2 Omega_0, closed through detailed balance.
    double s_plus(double omega0) const {
        const double boltzmann = std::exp(-2.0 * omega0 / t_eta_);
        return 2.0 * symmetrized_density(omega0) / (1.0 + boltzmann);
    }
    double s_minus(double omega0) const {
        return std::exp(-2.0 * omega0 / t_eta_) * s_plus(omega0);
    }

private:
    PumpNoiseModel() = default;

    Kind kind_ = Kind::direct;
    double s_bar_ = 0.0;
    double chi0_ = 0.0;
    double tau_dagger_ = 1.0;
    double t_eta_ = 1.0;
};

/// Golden-rule two-photon rates at occupation n.
struct TwoPhotonRates {
    double pair_absorption = 0.0;  ///< Gamma+ (n -> n-2)
    double pair_emission = 0.0;    ///< Gamma- (n-2 -> n)
};

/// Gamma+- = (pi Omega_0^2 / 8) S^+-(2 Omega_0) n (n - 1).
inline TwoPhotonRates two_photon_rates(long n, double omega0,
                                       const PumpNoiseModel& pump) {
    if (n < 0)
        throw DomainError("two_photon_rates: n must be >= 0");
    if (!(omega0 > 0.0))
        throw DomainError("two_photon_rates: omega0 must be > 0");

    const double nn = static_cast<double>(n) * static_cast<double>(n - 1);
    const double prefactor = std::numbers::pi * omega0 * omega0 / 8.0;
    TwoPhotonRates r;
    r.pair_absorption = prefactor * pump.s_plus(omega0) * nn;
    r.pair_emission = prefactor * pump.s_minus(omega0) * nn;
    return r;
}

/// Large-n golden-rule estimate of the net photon absorption rate,
/// (pi Omega_0^2 S_bar / 2) tanh(Omega_0 / T_eta) n^2.  This is the
/// per-event pair accounting of the rates above; the rate equation in
/// evolve_occupation carries its own (larger) loss coefficient.
inline double net_absorption_rate_estimate(double n, double omega0,
                                           const PumpNoiseModel& pump) {
    return 0.5 * std::numbers::pi * omega0 * omega0 *
           pump.symmetrized_density(omega0) *
           std::tanh(omega0 / pump.pump_temperature()) * n * n;
}

/// Nonlinear damping coefficient of the saturation rate equation,
/// gamma_tilde = pi Omega_0^2 S_bar(2 Omega_0) tanh(Omega_0 / T_eta).
/// For a Debye pump the coth from the fluctuation-dissipation theorem
/// cancels the tanh, leaving gamma_tilde = (Omega_0^2 / 2) Im chi(2 Omega_0).
inline double nonlinear_damping(double omega0, const PumpNoiseModel& pump) {
    if (!(omega0 > 0.0))
        throw DomainError("nonlinear_damping: omega0 must be > 0");
    return std::numbers::pi * omega0 * omega0 * pump.symmetrized_density(omega0) *
           std::tanh(omega0 / pump.pump_temperature());
}

/// Saturation occupations by the available routes.
struct SaturationReport {
    double gamma_tilde = 0.0;
    bool unbounded = false;   ///< gamma_tilde = 0: no saturation, pure growth
    double n_sat_rate_equation = 0.0;          ///< gamma / gamma_tilde
    std::optional<double> n_sat_response;      ///< via Im chi (Debye only)
    std::optional<double> n_sat_relaxation;    ///< via tau_dagger (Debye only)
    double consistency_defect = 0.0;  ///< max pairwise relative gap
};

/// Saturation of the parametric gain gamma against pump quantum noise.
///
/// Routes: the rate-equation fixed point gamma / gamma_tilde; for Debye
/// pumps also 2 gamma / (Omega_0^2 Im chi(2 Omega_0)) and the low-frequency
/// relaxation form gamma / (Omega_0^3 tau_dag chi(0)).  gamma_tilde = 0 is
/// reported as an unbounded outcome, not an error.
inline SaturationReport saturation_report(double gamma, double omega0,
                                          const PumpNoiseModel& pump) {
    if (!(gamma > 0.0))
        throw DomainError("saturation_report: gamma must be > 0");
    if (!(omega0 > 0.0))
        throw DomainError("saturation_report: omega0 must be > 0");

    SaturationReport r;
    r.gamma_tilde = nonlinear_damping(omega0, pump);
    if (r.gamma_tilde == 0.0) {
        r.unbounded = true;
        return r;
    }
    r.n_sat_rate_equation = gamma / r.gamma_tilde;

    if (pump.is_debye()) {
        r.n_sat_response = 2.0 * gamma / (omega0 * omega0 * pump.im_chi(2.0 * omega0));
        r.n_sat_relaxation =
            gamma / (omega0 * omega0 * omega0 * pump.tau_dagger() * pump.chi_zero());

        double defect = 0.0;
        const double values[3] = {r.n_sat_rate_equation, *r.n_sat_response,
                                  *r.n_sat_relaxation};
        for (int i = 0; i < 3; ++i) {
            for (int j = i + 1; j < 3; ++j) {
                const double gap = std::abs(values[i] - values[j]) /
                                   std::max(std::abs(values[i]), std::abs(values[j]));
                defect = std::max(defect, gap);
            }
        }
        r.consistency_defect = defect;
    }
    return r;
}

/// Closed-form solution of dn/dt = 2 (gamma n - gamma_tilde n^2) at time t.
inline double evolve_occupation(double n0, double gamma, double gamma_tilde,
                                double t) {
    if (n0 < 0.0)
        throw DomainError("evolve_occupation: n0 must be >= 0");
    if (gamma < 0.0 || gamma_tilde < 0.0)
        throw DomainError("evolve_occupation: rates must be >= 0");
    if (t < 0.0)
        throw DomainError("evolve_occupation: t must be >= 0");

    if (n0 == 0.0)
        return 0.0;
    if (gamma_tilde == 0.0)
        return n0 * std::exp(2.0 * gamma * t);
    if (gamma == 0.0)
        return n0 / (1.0 + 2.0 * gamma_tilde * n0 * t);
    // logistic, written so the exponential never overflows
    const double n_sat = gamma / gamma_tilde;
    return n_sat / (1.0 + (n_sat / n0 - 1.0) * std::exp(-2.0 * gamma * t));
}

/// Numerically integrated occupation trajectory (adaptive, for cross-checks
/// and future time-dependent gains).  Returns n(t_end).
inline double evolve_occupation_numeric(double n0, double gamma, double gamma_tilde,
                                        double t_end, double rel_tol = 1e-10) {
    if (n0 < 0.0 || gamma < 0.0 || gamma_tilde < 0.0 || t_end < 0.0)
        throw DomainError("evolve_occupation_numeric: bad arguments");
    if (t_end == 0.0)
        return n0;
    auto rhs = [gamma, gamma_tilde](double, const std::array<double, 1>& y,
                                    std::array<double, 1>& dy) {
        dy[0] = 2.0 * (gamma * y[0] - gamma_tilde * y[0] * y[0]);
    };
    OdeOptions opt;
    opt.rel_tol = rel_tol;
    opt.abs_tol = rel_tol * std::max(n0, 1e-30);
    return integrate_ode<1>(rhs, {n0}, 0.0, t_end, opt)[0];
}

/// Dimensionless saturation estimate for a laser-pumped semiconductor wall:
/// the product (gamma/Omega_0) (1/(Omega_0 tau_R)) (omega_L/Omega_0).
inline double braggio_estimate(double gain_ratio, double inv_omega_tau_r,
                               double laser_ratio) {
    if (!(gain_ratio > 0.0) || !(inv_omega_tau_r > 0.0) || !(laser_ratio > 0.0))
        throw DomainError("braggio_estimate: all three ratios must be > 0");
    return gain_ratio * inv_omega_tau_r * laser_ratio;
}

} // namespace cavmode
