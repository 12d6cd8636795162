#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <queue>
#include <span>
#include <vector>

#include "cavmode/errors.hpp"

namespace cavmode {

/// Options for the adaptive Gauss-Kronrod driver.
struct QuadratureOptions {
    double rel_tol = 1e-9;
    double abs_tol = 0.0;       ///< absolute floor added to the target
    int max_intervals = 4000;   ///< evaluation budget (15 calls per interval)
};

namespace detail {

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule
// (QUADPACK values, positive half of the symmetric rule).
inline constexpr double kGk15Nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kGk15Weights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double kGauss7Weights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

inline double value_norm(double x) { return std::abs(x); }
inline double value_norm(const std::complex<double>& x) { return std::abs(x); }

// One Gauss-Kronrod 15(7) panel.  Returns the Kronrod estimate and a
// QUADPACK-style error bound.
template <typename Value, typename F>
void gk15_panel(F&& f, double a, double b, Value& result, double& error) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    Value fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(center - half * kGk15Nodes[i]);
        fv[14 - i] = f(center + half * kGk15Nodes[i]);
    }
    fv[7] = f(center);

    Value kronrod{};
    Value gauss{};
    for (int i = 0; i < 8; ++i) {
        const Value pair = (i == 7) ? fv[7] : fv[i] + fv[14 - i];
        kronrod += kGk15Weights[i] * pair;
        if (i % 2 == 1)
            gauss += kGauss7Weights[i / 2] * pair;
    }
    kronrod *= half;
    gauss *= half;
    result = kronrod;

    // Scaled error estimate: sharper than |K - G| alone once the panel is
    // resolved, conservative when it is not.
    const Value mean = kronrod / (b - a);
    double resasc = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double w = kGk15Weights[i];
        if (i == 7) {
            resasc += w * value_norm(fv[7] - mean);
        } else {
            resasc += w * (value_norm(fv[i] - mean) + value_norm(fv[14 - i] - mean));
        }
    }
    resasc *= std::abs(half);
    double err = value_norm(kronrod - gauss);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    error = err;
}

struct IntervalEntry {
    double error;
    double a;
    double b;
    std::size_t slot;
    bool operator<(const IntervalEntry& other) const { return error < other.error; }
};

} // namespace detail

/// Globally adaptive Gauss-Kronrod integration of f over [a, b].
///
/// Bisects the worst interval until the summed error estimate falls below
/// max(abs_tol, rel_tol * |integral|).  Throws QuadratureError when the
/// interval budget is exhausted first.  `breakpoints` seeds the initial
/// partition with known non-smooth points (table nodes, support edges) so no
/// panel ever straddles one.
template <typename Value, typename F>
Value integrate(F&& f, double a, double b, const QuadratureOptions& opt = {},
                std::span<const double> breakpoints = {}) {
    if (a == b)
        return Value{};

    std::vector<double> edges;
    edges.reserve(breakpoints.size() + 2);
    edges.push_back(a);
    for (double p : breakpoints)
        if (p > a && p < b)
            edges.push_back(p);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());

    std::vector<Value> results;
    std::priority_queue<detail::IntervalEntry> queue;

    Value total{};
    double total_error = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        Value r;
        double e;
        detail::gk15_panel<Value>(f, edges[i], edges[i + 1], r, e);
        results.push_back(r);
        queue.push({e, edges[i], edges[i + 1], results.size() - 1});
        total += r;
        total_error += e;
    }
    int used = static_cast<int>(results.size());
    const int budget = std::max(opt.max_intervals, 2 * used);

    auto target = [&]() {
        return std::max(opt.abs_tol, opt.rel_tol * detail::value_norm(total));
    };

    while (total_error > target()) {
        if (used >= budget)
            throw QuadratureError("adaptive quadrature: interval budget exhausted");
        const auto worst = queue.top();
        queue.pop();

        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b)
            throw QuadratureError("adaptive quadrature: interval underflow");

        Value rl, rr;
        double el, er;
        detail::gk15_panel<Value>(f, worst.a, mid, rl, el);
        detail::gk15_panel<Value>(f, mid, worst.b, rr, er);
        ++used;

        total += rl + rr - results[worst.slot];
        total_error += el + er - worst.error;

        results[worst.slot] = rl;
        queue.push({el, worst.a, mid, worst.slot});
        results.push_back(rr);
        queue.push({er, mid, worst.b, results.size() - 1});
    }

    // Refresh the accumulated sum; the incremental updates above can drift.
    total = Value{};
    for (const auto& r : results)
        total += r;
    return total;
}

/// Integrates f over [a, +inf) through the map w = a + u/(1-u), u in [0,1).
///
/// The integrand must decay at least like w^(-p) with p > 1 for the
/// transformed integral to converge; interior quadrature nodes never touch
/// u = 1, so integrable endpoint singularities are handled adaptively.
/// Suited to p >= 2; for slower power-law tails use integrate_power_tail.
template <typename Value, typename F>
Value integrate_to_infinity(F&& f, double a, const QuadratureOptions& opt = {}) {
    auto g = [&f, a](double u) {
        const double inv = 1.0 / (1.0 - u);
        const double w = a + u * inv;
        return f(w) * (inv * inv);
    };
    return integrate<Value>(g, 0.0, 1.0, opt);
}

/// Integrates f over [a, +inf) for integrands decaying like w^(-p), p > 1,
/// with a > 0.  The log map w = a e^s turns the tail into an exponential
/// decay e^{-(p-1)s}, truncated where the remaining mass is below 1e-17 of
/// the leading panel.
template <typename Value, typename F>
Value integrate_power_tail(F&& f, double a, double decay_exponent,
                           const QuadratureOptions& opt = {}) {
    if (!(a > 0.0))
        throw DomainError("integrate_power_tail: lower limit must be positive");
    if (!(decay_exponent > 1.0))
        throw DomainError("integrate_power_tail: need decay exponent > 1");
    const double s_max = 40.0 / (decay_exponent - 1.0);
    auto g = [&f, a](double s) {
        const double w = a * std::exp(s);
        return f(w) * w;
    };
    return integrate<Value>(g, 0.0, s_max, opt);
}

} // namespace cavmode
