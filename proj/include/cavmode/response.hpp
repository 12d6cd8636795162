#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <vector>

#include "cavmode/damping.hpp"
#include "cavmode/errors.hpp"
#include "cavmode/mode.hpp"
#include "cavmode/quadrature.hpp"

namespace cavmode {

using Complex = std::complex<double>;

/// Options for the dispersion-integral evaluation of the self-energy.
struct SelfEnergyOptions {
    double rel_tol = 1e-9;
    double abs_floor = 0.0;   ///< absolute tolerance floor, e.g. 1e-14 * Omega_inf^2
    int max_intervals = 4000;

    QuadratureOptions quadrature() const {
        return {rel_tol, abs_floor, max_intervals};
    }
};

/// Self-energy Pi(zeta) for Im zeta >= 0 from the causal dispersion relation
///
///   Pi(zeta) = (2/pi) Int_0^inf  w Im Pi(w + i0+) / (w^2 - zeta^2) dw .
///
/// On the real axis the imaginary part is read off the damping model and the
/// real part is the principal-value integral, evaluated by splitting at the
/// singular point and integrating the symmetrized difference.
inline Complex self_energy(const DampingModel& model, Complex zeta,
                           const SelfEnergyOptions& opt = {}) {
    if (zeta.imag() < 0.0)
        throw DomainError("self_energy: zeta must lie in the closed upper half plane");

    const QuadratureOptions q = opt.quadrature();
    const double scale = model.frequency_scale();
    const auto nodes = model.table_nodes();
    const double tail_p = model.tail_exponent_hint();

    // integrand tails all decay like Re Gamma ~ w^-p
    auto tail_integral = [&](auto&& f, double from) {
        return integrate_power_tail<std::decay_t<decltype(f(1.0))>>(f, from, tail_p, q);
    };

    try {
        if (zeta.imag() == 0.0) {
            const double w0 = std::abs(zeta.real());
            if (w0 == 0.0) {
                // integrand w ImPi / w^2 = Re Gamma is regular at w = 0
                auto f = [&model](double w) { return model.re_gamma(w); };
                const double split = std::max(10.0 * scale, 1e-30);
                const double value = integrate<double>(f, 0.0, split, q, nodes) +
                                     tail_integral(f, split);
                return Complex((2.0 / std::numbers::pi) * value, 0.0);
            }

            // numerator of the dispersion integrand, h(w) = w ImPi(w)
            auto h = [&model](double w) { return w * model.im_pi(w); };

            // [0, w0/2] and [3 w0/2, W] + tail are regular; the window
            // around w0 is folded into a symmetrized difference in u = w - w0.
            const double delta = 0.5 * w0;
            auto outer = [&](double w) { return h(w) / (w * w - w0 * w0); };
            auto folded = [&](double u) {
                return (h(w0 + u) / (2.0 * w0 + u) - h(w0 - u) / (2.0 * w0 - u)) / u;
            };

            // interpolation kinks of the folded integrand sit at |node - w0|
            std::vector<double> fold_cuts;
            for (double node : nodes) {
                const double u = std::abs(node - w0);
                if (u > 0.0 && u < delta)
                    fold_cuts.push_back(u);
            }
            std::sort(fold_cuts.begin(), fold_cuts.end());

            const double split = std::max(3.0 * w0, 10.0 * scale);
            double value = integrate<double>(outer, 0.0, 0.5 * w0, q, nodes);
            value += integrate<double>(folded, 0.0, delta, q, fold_cuts);
            if (split > 1.5 * w0)
                value += integrate<double>(outer, 1.5 * w0, split, q, nodes);
            value += tail_integral(outer, split);

            const double re = (2.0 / std::numbers::pi) * value;
            const double im = model.im_pi(w0);
            // Pi(-w + i0+) = conj(Pi(w + i0+))
            return zeta.real() >= 0.0 ? Complex(re, im) : Complex(re, -im);
        }

        const Complex zeta_sq = zeta * zeta;
        auto f = [&model, zeta_sq](double w) {
            return w * model.im_pi(w) /
                   Complex(w * w - zeta_sq.real(), -zeta_sq.imag());
        };
        const double split = std::max(10.0 * scale, 3.0 * std::abs(zeta));
        const Complex value =
            integrate<Complex>(f, 0.0, split, q, nodes) + tail_integral(f, split);
        return (2.0 / std::numbers::pi) * value;
    } catch (const QuadratureError& e) {
        throw QuadratureError(std::string("self_energy: ") + e.what());
    }
}

/// Retarded mode propagator with a near-pole diagnostic.
struct PropagatorResult {
    Complex value;
    bool pole_proximity = false;   ///< |denominator| < 1e-12 * Omega_inf^2
};

/// D(zeta) = (Lambda/c) Omega_inf^2 / (Omega_inf^2 - zeta^2 - Pi(zeta)).
inline PropagatorResult propagator(const CavityMode& mode, const DampingModel& model,
                                   Complex zeta, SelfEnergyOptions opt = {}) {
    const double w2 = mode.bare_frequency_squared();
    if (opt.abs_floor == 0.0)
        opt.abs_floor = 1e-14 * w2;
    const Complex pi = self_energy(model, zeta, opt);
    const Complex denom = w2 - zeta * zeta - pi;
    PropagatorResult r;
    r.pole_proximity = std::abs(denom) < 1e-12 * w2;
    r.value = (mode.inductance() / mode.light_speed()) * w2 / denom;
    return r;
}

/// Effective dielectric function eps(zeta) = 1 + Pi(zeta)/zeta^2, defined so
/// that -i zeta eps(zeta) C = -i zeta C + Y(zeta).
inline Complex dielectric(const CavityMode& mode, const DampingModel& model,
                          Complex zeta, SelfEnergyOptions opt = {}) {
    if (zeta == Complex(0.0, 0.0))
        throw DomainError("dielectric: undefined at zeta = 0");
    if (opt.abs_floor == 0.0)
        opt.abs_floor = 1e-14 * mode.bare_frequency_squared();
    return 1.0 + self_energy(model, zeta, opt) / (zeta * zeta);
}

/// Induced-current admittance Y(zeta) = -i C Pi(zeta) / zeta.
inline Complex admittance(const CavityMode& mode, const DampingModel& model,
                          Complex zeta, SelfEnergyOptions opt = {}) {
    if (zeta == Complex(0.0, 0.0))
        throw DomainError("admittance: undefined at zeta = 0");
    if (opt.abs_floor == 0.0)
        opt.abs_floor = 1e-14 * mode.bare_frequency_squared();
    return Complex(0.0, -1.0) * mode.capacitance() *
           self_energy(model, zeta, opt) / zeta;
}

/// Static renormalization summary of the damped mode.
struct Renormalization {
    double shifted_frequency = 0.0;          ///< Omega_0
    double pi_at_zero = 0.0;                 ///< Pi(0)
    std::optional<double> quality_factor;    ///< absent when Re Gamma(Omega_0) = 0
    bool weak_damping = false;               ///< Q > 10 (or unbounded)
    double sum_rule_residual = 0.0;          ///< relative defect of the sum rule
};

/// Shifted frequency, sum-rule residual and quality factor.
///
/// Omega_0^2 = Omega_inf^2 - Pi(0); throws UnstableStaticError when
/// Pi(0) >= Omega_inf^2 (see the thermodynamic module for that regime).
/// Q = Omega_0 / Re Gamma(Omega_0) is reported together with a weak-damping
/// flag since it is only meaningful for strongly under-damped modes.
inline Renormalization renormalize(const CavityMode& mode, const DampingModel& model,
                                   SelfEnergyOptions opt = {}) {
    const double w_inf_sq = mode.bare_frequency_squared();
    if (opt.abs_floor == 0.0)
        opt.abs_floor = 1e-14 * w_inf_sq;

    Renormalization r;
    r.pi_at_zero = model.pi_zero();
    if (r.pi_at_zero >= w_inf_sq)
        throw UnstableStaticError(r.pi_at_zero - w_inf_sq);

    const double w0_sq = w_inf_sq - r.pi_at_zero;
    r.shifted_frequency = std::sqrt(w0_sq);

    const double integral = model.re_gamma_integral(opt.quadrature());
    r.sum_rule_residual =
        std::abs(w_inf_sq - w0_sq - (2.0 / std::numbers::pi) * integral) / w_inf_sq;

    const double damping_at_w0 = model.re_gamma(r.shifted_frequency);
    if (damping_at_w0 > 0.0) {
        r.quality_factor = r.shifted_frequency / damping_at_w0;
        r.weak_damping = *r.quality_factor > 10.0;
    } else {
        r.quality_factor = std::nullopt;
        r.weak_damping = true;
    }
    return r;
}

} // namespace cavmode
