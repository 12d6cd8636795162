#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "cavmode/errors.hpp"

namespace cavmode {

/// Options for the adaptive Dormand-Prince 5(4) driver.
struct OdeOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double initial_step = 0.0;      ///< 0 = pick automatically
    long max_steps = 2'000'000;
};

/// Integrates y' = f(t, y) from t0 to t1 with an embedded 5(4) pair.
///
/// f has signature f(double t, const std::array<double,N>& y,
///                   std::array<double,N>& dydt).
/// Throws IntegratorError on step-size underflow or step-count exhaustion.
template <std::size_t N, typename F>
std::array<double, N> integrate_ode(F&& f, std::array<double, N> y,
                                    double t0, double t1,
                                    const OdeOptions& opt = {}) {
    using State = std::array<double, N>;

    if (t1 == t0)
        return y;
    if (t1 < t0)
        throw DomainError("integrate_ode: backward integration not supported");

    // Dormand-Prince coefficients.
    constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    constexpr double a21 = 1.0 / 5;
    constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                     a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                     a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                     a65 = -5103.0 / 18656;
    constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                     b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    // 5th-order minus embedded 4th-order weights.
    constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                     e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    State k1, k2, k3, k4, k5, k6, k7, ytmp, ynew;

    double t = t0;
    double h = opt.initial_step > 0.0 ? opt.initial_step : (t1 - t0) * 1e-2;
    h = std::min(h, t1 - t0);

    f(t, y, k1);
    long steps = 0;

    while (t < t1) {
        if (++steps > opt.max_steps)
            throw IntegratorError("integrate_ode: step budget exhausted");
        if (h < 16.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(t), 1.0))
            throw IntegratorError("integrate_ode: step size underflow");
        if (t + h > t1)
            h = t1 - t;

        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y[i] + h * a21 * k1[i];
        f(t + c2 * h, ytmp, k2);
        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        f(t + c3 * h, ytmp, k3);
        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        f(t + c4 * h, ytmp, k4);
        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        f(t + c5 * h, ytmp, k5);
        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                                  a64 * k4[i] + a65 * k5[i]);
        f(t + h, ytmp, k6);
        for (std::size_t i = 0; i < N; ++i)
            ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] +
                                  b5 * k5[i] + b6 * k6[i]);
        f(t + h, ynew, k7);

        double err = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] +
                                   e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
            const double scale =
                opt.abs_tol + opt.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            err += (ei / scale) * (ei / scale);
        }
        err = std::sqrt(err / static_cast<double>(N));

        if (err <= 1.0) {
            t += h;
            y = ynew;
            k1 = k7; // first-same-as-last; on rejection k1 = f(t, y) still holds
        }

        const double factor =
            (err == 0.0) ? 5.0
                         : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
        h *= factor;
    }
    return y;
}

/// Real 2x2 matrix acting on the oscillator state (phi, dphi/dt).
struct Mat2 {
    // row-major entries
    double m00 = 1.0, m01 = 0.0;
    double m10 = 0.0, m11 = 1.0;

    static Mat2 identity() { return {}; }

    /// Transfer matrix of phi'' + w^2 phi = 0 over a duration d at constant w.
    static Mat2 rotation(double w, double d) {
        const double c = std::cos(w * d);
        const double s = std::sin(w * d);
        return {c, s / w, -w * s, c};
    }

    double trace() const noexcept { return m00 + m11; }
    double det() const noexcept { return m00 * m11 - m01 * m10; }

    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
                a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
    }
};

/// Transfer matrix of phi'' + w2(t) phi = 0 from t0 to t1.
///
/// Both basis columns are propagated together; `breakpoints` lists interior
/// times where w2 is non-smooth, and integration restarts at each so the
/// embedded error estimate never straddles a discontinuity.
template <typename W2>
Mat2 oscillator_transfer_matrix(W2&& w2, double t0, double t1,
                                std::span<const double> breakpoints,
                                double tol = 1e-10) {
    auto rhs = [&w2](double t, const std::array<double, 4>& y,
                     std::array<double, 4>& dy) {
        const double w = w2(t);
        // columns (y[0], y[1]) and (y[2], y[3]) of the matrix
        dy[0] = y[1];
        dy[1] = -w * y[0];
        dy[2] = y[3];
        dy[3] = -w * y[2];
    };

    std::vector<double> cuts;
    cuts.reserve(breakpoints.size() + 2);
    cuts.push_back(t0);
    for (double b : breakpoints)
        if (b > t0 && b < t1)
            cuts.push_back(b);
    cuts.push_back(t1);
    std::sort(cuts.begin(), cuts.end());

    OdeOptions opt;
    opt.rel_tol = tol;
    opt.abs_tol = tol * 1e-2;

    std::array<double, 4> y{1.0, 0.0, 0.0, 1.0};
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        y = integrate_ode<4>(rhs, y, cuts[i], cuts[i + 1], opt);

    // state columns map (phi, phidot)_t0 -> (phi, phidot)_t1
    return {y[0], y[2], y[1], y[3]};
}

} // namespace cavmode
