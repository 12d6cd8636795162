#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "cavmode/errors.hpp"
#include "cavmode/ode.hpp"
#include "cavmode/pulse.hpp"

namespace cavmode {

/// Scattering amplitudes of the mode signal across one pulse, in the
/// convention
///
///   phi(t -> +inf) = e^{i Omega_0 t} + rho e^{-i Omega_0 t},
///   phi(t -> -inf) = sigma e^{i Omega_0 t},  sigma = sqrt(P) e^{-i Theta}.
struct ScatteringResult {
    std::complex<double> rho;
    std::complex<double> sigma;
    double reflection = 0.0;     ///< R = |rho|^2
    double transmission = 1.0;   ///< P = |sigma|^2
    double phase = 0.0;          ///< Theta
    double unitarity_defect = 0.0;   ///< |R + P - 1|
};

namespace detail {

inline ScatteringResult amplitudes_from_transfer(const Mat2& m, double omega0,
                                                 double t_begin, double t_end) {
    using C = std::complex<double>;
    const C i(0.0, 1.0);

    // Image of the plane-wave state e^{i w t} under the transfer matrix.
    const C exp_a = std::exp(i * omega0 * t_begin);
    const C u0 = (m.m00 + i * omega0 * m.m01) * exp_a;
    const C u1 = (m.m10 + i * omega0 * m.m11) * exp_a;

    const C exp_b = std::exp(i * omega0 * t_end);
    const C denom = i * omega0 * u0 + u1;

    ScatteringResult r;
    r.sigma = 2.0 * i * omega0 * exp_b / denom;
    r.rho = exp_b * exp_b * (i * omega0 * u0 - u1) / denom;
    r.reflection = std::norm(r.rho);
    r.transmission = std::norm(r.sigma);
    r.phase = -std::arg(r.sigma);
    r.unitarity_defect = std::abs(r.reflection + r.transmission - 1.0);
    return r;
}

} // namespace detail

/// Scatters the signal phi'' + (Omega_0^2 + nu^2(t)) phi = 0 across one pulse.
///
/// The real 2x2 transfer matrix over the pulse support is built with the
/// adaptive integrator at local tolerance `tol`, then matched to the
/// asymptotic plane-wave forms.  Wronskian conservation guarantees
/// R + P = 1 up to integrator error, reported as unitarity_defect.
inline ScatteringResult scatter_pulse(double omega0, const PulseProfile& pulse,
                                      double tol = 1e-10) {
    if (!(omega0 > 0.0))
        throw DomainError("scatter_pulse: omega0 must be > 0");
    pulse.require_positive_frequency(omega0);

    const double ta = pulse.support_begin();
    const double tb = pulse.support_end();
    auto w2 = [&](double t) {
        return omega0 * omega0 + pulse.nu_squared(t, omega0);
    };
    const auto cuts = pulse.interior_breakpoints();
    const Mat2 m = oscillator_transfer_matrix(w2, ta, tb, cuts, tol);
    return detail::amplitudes_from_transfer(m, omega0, ta, tb);
}

/// Stability class of periodic motion from the characteristic value mu.
struct FloquetClass {
    enum class Kind { stable, unstable, marginal };
    Kind kind = Kind::stable;
    double floquet_frequency = 0.0;  ///< Omega in (0, pi/tau), stable case
    double growth_rate = 0.0;        ///< gamma >= 0, unstable case
    int sign = +1;                   ///< +1 for mu > 1, -1 for the period-doubling branch

    bool is_stable() const noexcept { return kind == Kind::stable; }
    bool is_unstable() const noexcept { return kind == Kind::unstable; }
    bool is_marginal() const noexcept { return kind == Kind::marginal; }
};

/// Classifies the characteristic value: stable for -1 < mu < 1 with
/// mu = cos(Omega tau), unstable for |mu| > 1 with |mu| = cosh(gamma tau),
/// marginal within `tol` of |mu| = 1.
inline FloquetClass classify(double mu, double tau, double tol = 1e-10) {
    if (!(tau > 0.0))
        throw DomainError("classify: tau must be > 0");
    FloquetClass c;
    if (std::abs(std::abs(mu) - 1.0) <= tol) {
        c.kind = FloquetClass::Kind::marginal;
    } else if (std::abs(mu) < 1.0) {
        c.kind = FloquetClass::Kind::stable;
        c.floquet_frequency = std::acos(mu) / tau;
    } else {
        c.kind = FloquetClass::Kind::unstable;
        c.growth_rate = std::acosh(std::abs(mu)) / tau;
        c.sign = mu > 0.0 ? +1 : -1;
    }
    return c;
}

/// One-period Floquet analysis of a pulse train.
struct FloquetResult {
    double mu = 0.0;              ///< characteristic value, (1/2) tr M
    FloquetClass classification;
    Mat2 monodromy;
    double det_defect = 0.0;          ///< |det M - 1|
    double cross_check_defect = 0.0;  ///< |mu - cos(Omega_0 tau + Theta_1)/sqrt(P_1)|
};

/// Builds the one-period transfer matrix (free evolution + pulse, honoring
/// the train offset), classifies mu = (1/2) tr M, and cross-checks mu
/// against the single-pulse scattering amplitudes.
inline FloquetResult monodromy(double omega0, const PulseTrain& train,
                               double tol = 1e-10) {
    if (!(omega0 > 0.0))
        throw DomainError("monodromy: omega0 must be > 0");
    train.pulse.require_positive_frequency(omega0);

    const auto [lead, tail] = train.margins();
    auto w2 = [&](double t) {
        return omega0 * omega0 + train.pulse.nu_squared(t, omega0);
    };
    const auto cuts = train.pulse.interior_breakpoints();
    const Mat2 pulse_part =
        oscillator_transfer_matrix(w2, train.pulse.support_begin(),
                                   train.pulse.support_end(), cuts, tol);

    Mat2 m = pulse_part;
    if (lead > 0.0)
        m = m * Mat2::rotation(omega0, lead);
    if (tail > 0.0)
        m = Mat2::rotation(omega0, tail) * m;

    FloquetResult r;
    r.monodromy = m;
    r.mu = 0.5 * m.trace();
    r.det_defect = std::abs(m.det() - 1.0);
    r.classification = classify(r.mu, train.period);

    const ScatteringResult s = detail::amplitudes_from_transfer(
        pulse_part, omega0, train.pulse.support_begin(), train.pulse.support_end());
    const double mu_formula =
        std::cos(omega0 * train.period + s.phase) / std::sqrt(s.transmission);
    r.cross_check_defect = std::abs(r.mu - mu_formula);
    return r;
}

/// Net photon production rate of an unstable mode with cavity loss,
/// Gamma_1 = 2 gamma - Omega_0 / Q (negative means net absorption).
inline double net_production_rate(double gamma, double omega0, double quality) {
    if (gamma < 0.0)
        throw DomainError("net_production_rate: gamma must be >= 0");
    if (!(quality > 0.0))
        throw DomainError("net_production_rate: Q must be > 0");
    return 2.0 * gamma - omega0 / quality;
}

/// One cell of the rectangular-train stability chart.
struct ChartCell {
    double alpha = 0.0;
    double omega0_tau = 0.0;
    double mu = 0.0;
    FloquetClass::Kind kind = FloquetClass::Kind::stable;
    double rate = 0.0;   ///< Omega (stable) or gamma (unstable)
    bool error = false;
    std::string error_message;

    std::string class_label() const {
        if (error)
            return "error";
        switch (kind) {
        case FloquetClass::Kind::stable:   return "stable";
        case FloquetClass::Kind::unstable: return "unstable";
        case FloquetClass::Kind::marginal: return "marginal";
        }
        return "error";
    }
};

/// Row-major scan of the (alpha, Omega_0 tau) plane for a rectangular train.
/// Failures are recorded per cell instead of aborting the scan.
inline std::vector<ChartCell> stability_chart(double omega0, double alpha_min,
                                              double alpha_max, double x_min,
                                              double x_max, int n_alpha, int n_x,
                                              double duty = 0.5, double tol = 1e-10) {
    if (!(omega0 > 0.0))
        throw DomainError("stability_chart: omega0 must be > 0");
    if (n_alpha < 2 || n_x < 2)
        throw DomainError("stability_chart: grid must be at least 2x2");
    if (!std::isfinite(alpha_min) || !std::isfinite(alpha_max) ||
        !std::isfinite(x_min) || !std::isfinite(x_max))
        throw DomainError("stability_chart: ranges must be finite");

    std::vector<ChartCell> cells;
    cells.reserve(static_cast<std::size_t>(n_alpha) * static_cast<std::size_t>(n_x));
    for (int ia = 0; ia < n_alpha; ++ia) {
        const double alpha =
            alpha_min + (alpha_max - alpha_min) * ia / static_cast<double>(n_alpha - 1);
        for (int ix = 0; ix < n_x; ++ix) {
            const double x =
                x_min + (x_max - x_min) * ix / static_cast<double>(n_x - 1);
            ChartCell cell;
            cell.alpha = alpha;
            cell.omega0_tau = x;
            try {
                const double tau = x / omega0;
                FloquetResult f;
                if (alpha == 0.0) {
                    // unmodulated period: exact free rotation
                    f.monodromy = Mat2::rotation(omega0, tau);
                    f.mu = 0.5 * f.monodromy.trace();
                    f.classification = classify(f.mu, tau);
                } else {
                    f = monodromy(omega0, PulseTrain::rectangular(alpha, tau, duty), tol);
                }
                cell.mu = f.mu;
                cell.kind = f.classification.kind;
                cell.rate = f.classification.is_stable()
                                ? f.classification.floquet_frequency
                                : f.classification.growth_rate;
            } catch (const Error& e) {
                cell.error = true;
                cell.error_message = e.what();
            }
            cells.push_back(std::move(cell));
        }
    }
    return cells;
}

} // namespace cavmode
