#pragma once

#include <algorithm>
#include <cmath>
#include <istream>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include "cavmode/errors.hpp"
#include "cavmode/io.hpp"
#include "cavmode/quadrature.hpp"

namespace cavmode {

/// Causal damping spectrum Re Gamma(omega + i0+) of the cavity walls.
///
/// The spectral density of the self-energy follows as
/// Im Pi(omega + i0+) = omega * Re Gamma(omega); passivity requires
/// Re Gamma >= 0.  Two variants are provided: a closed-form Drude spectrum
/// Gamma0 / (1 + (omega tau_c)^2) and a tabulated spectrum with a declared
/// power-law tail Re Gamma ~ omega^(-p), p > 1, so the frequency-shift sum
/// rule stays convergent.
class DampingModel {
public:
    enum class Kind { drude, tabulated };

    static DampingModel drude(double gamma0, double tau_c) {
        if (gamma0 < 0.0)
            throw DomainError("DampingModel: gamma0 must be >= 0");
        if (!(tau_c > 0.0))
            throw DomainError("DampingModel: tau_c must be > 0");
        DampingModel m;
        m.kind_ = Kind::drude;
        m.gamma0_ = gamma0;
        m.tau_c_ = tau_c;
        return m;
    }

    static DampingModel tabulated(std::vector<double> omega,
                                  std::vector<double> re_gamma,
                                  double decay_exponent) {
        if (omega.size() != re_gamma.size() || omega.size() < 2)
            throw DomainError("DampingModel: need matching omega/value arrays, >= 2 points");
        if (!(decay_exponent > 1.0))
            throw DomainError("DampingModel: tail decay exponent must exceed 1");
        if (!std::is_sorted(omega.begin(), omega.end()) || omega.front() < 0.0)
            throw DomainError("DampingModel: omega grid must be ascending and >= 0");
        for (std::size_t i = 1; i < omega.size(); ++i)
            if (omega[i] == omega[i - 1])
                throw DomainError("DampingModel: omega grid has duplicate points");
        for (double v : re_gamma)
            if (v < 0.0)
                throw DomainError("DampingModel: Re Gamma must be >= 0 (passivity)");
        DampingModel m;
        m.kind_ = Kind::tabulated;
        m.omega_ = std::move(omega);
        m.values_ = std::move(re_gamma);
        m.tail_exponent_ = decay_exponent;
        return m;
    }

    Kind kind() const noexcept { return kind_; }
    double drude_gamma0() const noexcept { return gamma0_; }
    double drude_tau_c() const noexcept { return tau_c_; }
    double tail_exponent() const noexcept { return tail_exponent_; }

    /// Re Gamma(omega + i0+) for omega >= 0.
    double re_gamma(double omega) const {
        if (omega < 0.0)
            throw DomainError("re_gamma: omega must be >= 0");
        if (kind_ == Kind::drude) {
            const double x = omega * tau_c_;
            return gamma0_ / (1.0 + x * x);
        }
        if (omega <= omega_.front())
            return values_.front();
        if (omega >= omega_.back()) {
            // declared power-law tail
            return values_.back() * std::pow(omega_.back() / omega, tail_exponent_);
        }
        const auto it = std::upper_bound(omega_.begin(), omega_.end(), omega);
        const std::size_t hi = static_cast<std::size_t>(it - omega_.begin());
        const std::size_t lo = hi - 1;
        const double t = (omega - omega_[lo]) / (omega_[hi] - omega_[lo]);
        return values_[lo] + t * (values_[hi] - values_[lo]);
    }

    /// Spectral density Im Pi(omega + i0+) = omega Re Gamma(omega).
    double im_pi(double omega) const { return omega * re_gamma(omega); }

    /// Self-energy on the imaginary axis, Pi(i y), y >= 0.
    ///
    /// Drude reduces in closed form to Gamma0 / (tau_c (1 + y tau_c));
    /// tabulated spectra go through the dispersion integral, seeded with the
    /// table nodes so interpolation kinks never sit inside a panel.
    double pi_imag_axis(double y, const QuadratureOptions& opt = {}) const {
        if (y < 0.0)
            throw DomainError("pi_imag_axis: y must be >= 0");
        if (kind_ == Kind::drude)
            return gamma0_ / (tau_c_ * (1.0 + y * tau_c_));

        auto integrand = [this, y](double w) {
            return w * w * re_gamma(w) / (w * w + y * y);
        };
        QuadratureOptions o = opt;
        o.abs_tol = std::max(o.abs_tol, 1e-300);
        const double head = integrate<double>(integrand, 0.0, omega_.back(), o, omega_);
        // tail integrand ~ w^-p from the declared power law
        const double tail =
            integrate_power_tail<double>(integrand, omega_.back(), tail_exponent_, o);
        return (2.0 / std::numbers::pi) * (head + tail);
    }

    /// Pi(0), the static self-energy.
    double pi_zero() const {
        if (kind_ == Kind::drude)
            return gamma0_ / tau_c_;
        return pi_imag_axis(0.0);
    }

    /// Int_0^inf Re Gamma(omega) d omega, evaluated by quadrature so the
    /// sum-rule residual stays an independent consistency check.
    double re_gamma_integral(const QuadratureOptions& opt = {}) const {
        QuadratureOptions o = opt;
        o.abs_tol = std::max(o.abs_tol, 1e-300);
        auto f = [this](double w) { return re_gamma(w); };
        if (kind_ == Kind::drude) {
            const double split = 10.0 / tau_c_;
            return integrate<double>(f, 0.0, split, o) +
                   integrate_to_infinity<double>(f, split, o);
        }
        const double head = integrate<double>(f, 0.0, omega_.back(), o, omega_);
        // closed-form tail of the declared power law
        const double tail =
            values_.back() * omega_.back() / (tail_exponent_ - 1.0);
        return head + tail;
    }

    /// Largest frequency scale of the spectrum, used to place quadrature
    /// split points.
    double frequency_scale() const noexcept {
        return kind_ == Kind::drude ? 1.0 / tau_c_ : omega_.back();
    }

    /// Power-law decay exponent of Re Gamma at high frequency (Drude is 2).
    double tail_exponent_hint() const noexcept {
        return kind_ == Kind::drude ? 2.0 : tail_exponent_;
    }

    /// Interpolation nodes of a tabulated spectrum (empty for closed forms);
    /// dispersion integrals seed their panels with these.
    std::span<const double> table_nodes() const noexcept { return omega_; }

private:
    DampingModel() = default;

    Kind kind_ = Kind::drude;
    double gamma0_ = 0.0;
    double tau_c_ = 1.0;
    std::vector<double> omega_;
    std::vector<double> values_;
    double tail_exponent_ = 2.0;
};

/// Reads a tabulated spectrum from CSV `omega,re_gamma` with sidecar `# p=`.
inline DampingModel load_damping_spectrum(std::istream& in) {
    const CsvTable table = read_csv(in);
    if (table.header != std::vector<std::string>{"omega", "re_gamma"})
        throw DomainError("damping CSV header must be omega,re_gamma");
    const double p = table.sidecar_number("p");
    std::vector<double> omega, values;
    omega.reserve(table.rows.size());
    values.reserve(table.rows.size());
    for (const auto& row : table.rows) {
        omega.push_back(row[0]);
        values.push_back(row[1]);
    }
    return DampingModel::tabulated(std::move(omega), std::move(values), p);
}

} // namespace cavmode
