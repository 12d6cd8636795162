#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "cavmode/errors.hpp"

namespace cavmode {

/// One period's worth of frequency modulation nu^2(t), compactly supported.
///
/// The instantaneous squared frequency of the driven mode is
/// Omega^2(t) = Omega_0^2 + nu^2(t).  Three families are provided:
///  - rectangular: the frequency steps to (1 + alpha) Omega_0 over a window,
///    so nu^2 = ((1+alpha)^2 - 1) Omega_0^2 there (alpha is a fractional step
///    and the profile scales with the carrier it is applied to);
///  - gaussian: nu^2(t) = a exp(-t^2/w^2), truncated at |t| = 6w where the
///    profile has fallen below 2e-16 of its peak;
///  - tabulated: linear interpolation of nu^2 samples on a uniform grid.
class PulseProfile {
public:
    enum class Kind { rectangular, gaussian, tabulated };

    static PulseProfile rectangular(double alpha, double duration) {
        if (!(alpha > -1.0))
            throw DomainError("rectangular pulse: need alpha > -1");
        if (!(duration > 0.0))
            throw DomainError("rectangular pulse: need duration > 0");
        PulseProfile p;
        p.kind_ = Kind::rectangular;
        p.alpha_ = alpha;
        p.begin_ = 0.0;
        p.end_ = duration;
        return p;
    }

    static PulseProfile gaussian(double amplitude, double width) {
        if (!(width > 0.0))
            throw DomainError("gaussian pulse: need width > 0");
        PulseProfile p;
        p.kind_ = Kind::gaussian;
        p.amplitude_ = amplitude;
        p.width_ = width;
        p.begin_ = -6.0 * width;
        p.end_ = 6.0 * width;
        return p;
    }

    static PulseProfile tabulated(std::vector<double> nu_squared, double t_start,
                                  double dt) {
        if (nu_squared.size() < 2)
            throw DomainError("tabulated pulse: need at least 2 samples");
        if (!(dt > 0.0))
            throw DomainError("tabulated pulse: need dt > 0");
        PulseProfile p;
        p.kind_ = Kind::tabulated;
        p.samples_ = std::move(nu_squared);
        p.begin_ = t_start;
        p.dt_ = dt;
        p.end_ = t_start + dt * static_cast<double>(p.samples_.size() - 1);
        return p;
    }

    Kind kind() const noexcept { return kind_; }
    double support_begin() const noexcept { return begin_; }
    double support_end() const noexcept { return end_; }
    double support_length() const noexcept { return end_ - begin_; }
    double alpha() const noexcept { return alpha_; }

    /// nu^2(t) for the given carrier frequency; zero outside the support.
    double nu_squared(double t, double omega0) const {
        if (t < begin_ || t > end_)
            return 0.0;
        switch (kind_) {
        case Kind::rectangular: {
            const double step = 1.0 + alpha_;
            return (step * step - 1.0) * omega0 * omega0;
        }
        case Kind::gaussian: {
            const double u = t / width_;
            return amplitude_ * std::exp(-u * u);
        }
        case Kind::tabulated: {
            const double s = (t - begin_) / dt_;
            std::size_t lo = static_cast<std::size_t>(s);
            if (lo >= samples_.size() - 1)
                lo = samples_.size() - 2;
            const double frac = s - static_cast<double>(lo);
            return samples_[lo] + frac * (samples_[lo + 1] - samples_[lo]);
        }
        }
        return 0.0;
    }

    /// Interior times where nu^2 is non-smooth; integrators restart there.
    std::vector<double> interior_breakpoints() const {
        std::vector<double> cuts;
        if (kind_ == Kind::tabulated) {
            cuts.reserve(samples_.size() - 2);
            for (std::size_t i = 1; i + 1 < samples_.size(); ++i)
                cuts.push_back(begin_ + dt_ * static_cast<double>(i));
        }
        // rectangular jumps sit exactly at the support edges; gaussian is smooth
        return cuts;
    }

    /// Throws unless Omega_0^2 + nu^2(t) > 0 everywhere.  Piecewise-linear
    /// and gaussian profiles attain their minima at sample points or at the
    /// peak, so the check is exact.
    void require_positive_frequency(double omega0) const {
        const double floor = -omega0 * omega0;
        double min_nu2 = 0.0;  // outside the support
        switch (kind_) {
        case Kind::rectangular: {
            const double step = 1.0 + alpha_;
            min_nu2 = std::min(0.0, (step * step - 1.0) * omega0 * omega0);
            break;
        }
        case Kind::gaussian:
            min_nu2 = std::min(0.0, amplitude_);
            break;
        case Kind::tabulated:
            for (double v : samples_)
                min_nu2 = std::min(min_nu2, v);
            break;
        }
        if (!(min_nu2 > floor))
            throw NonPositiveFrequencyError(
                "pulse drives Omega^2(t) non-positive for this carrier");
    }

private:
    PulseProfile() = default;

    Kind kind_ = Kind::rectangular;
    double begin_ = 0.0;
    double end_ = 0.0;
    double alpha_ = 0.0;       // rectangular
    double amplitude_ = 0.0;   // gaussian
    double width_ = 1.0;       // gaussian
    std::vector<double> samples_;  // tabulated
    double dt_ = 0.0;              // tabulated
};

/// Periodic train of identical non-overlapping pulses.
///
/// Within each period the pulse is centered, shifted by the phase offset t0;
/// the support (plus the offset) must fit inside one period.  The offset
/// conjugates the one-period transfer matrix without changing its trace.
struct PulseTrain {
    PulseProfile pulse;
    double period = 0.0;
    double offset = 0.0;   ///< t0
    long pulse_count = 1;  ///< n_p

    PulseTrain(PulseProfile p, double tau, double t0 = 0.0, long n_p = 1)
        : pulse(std::move(p)), period(tau), offset(t0), pulse_count(n_p) {
        if (!(period > 0.0))
            throw DomainError("PulseTrain: period must be > 0");
        if (pulse_count < 1)
            throw DomainError("PulseTrain: need at least one pulse");
        const double margin = 0.5 * (period - pulse.support_length());
        if (margin < 0.0 || std::abs(offset) > margin)
            throw DomainError("PulseTrain: pulse support does not fit in one period");
    }

    /// Rectangular train: the stepped window occupies `duty` of each period.
    static PulseTrain rectangular(double alpha, double period, double duty = 0.5,
                                  double t0 = 0.0, long n_p = 1) {
        if (!(duty > 0.0) || !(duty < 1.0))
            throw DomainError("PulseTrain: duty must lie in (0, 1)");
        return PulseTrain(PulseProfile::rectangular(alpha, duty * period), period,
                          t0, n_p);
    }

    /// Free-evolution margins before/after the pulse inside one period.
    std::pair<double, double> margins() const {
        const double m = 0.5 * (period - pulse.support_length());
        return {m + offset, m - offset};
    }
};

} // namespace cavmode
