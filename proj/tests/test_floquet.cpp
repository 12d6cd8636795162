#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "cavmode/floquet.hpp"
#include "test_helpers.hpp"

using namespace cavmode;
using test_helpers::rel_err;
using C = std::complex<double>;

namespace {

// Independent oracle for a rectangular pulse: match plane waves at the two
// interfaces (region [0,d] oscillates at w1) and solve for the amplitudes.
struct RectAmplitudes {
    C rho;
    C sigma;
};

RectAmplitudes rect_interface_oracle(double w0, double w1, double d) {
    const C i(0.0, 1.0);
    // sigma (1, i w0) at t=0 propagated as A e^{i w1 t} + B e^{-i w1 t}
    // continuity at t=0 gives A, B in terms of sigma; at t=d match to
    // e^{i w0 t} + rho e^{-i w0 t}.  Eliminating A, B yields a 2x2 system in
    // (sigma, rho).
    const C e1 = std::exp(i * w1 * d);
    const C em1 = std::exp(-i * w1 * d);
    const C e0 = std::exp(i * w0 * d);
    const C em0 = std::exp(-i * w0 * d);

    const double r = w0 / w1;
    // A = sigma (1 + r)/2, B = sigma (1 - r)/2
    const C pa = 0.5 * (1.0 + r) * e1;
    const C pb = 0.5 * (1.0 - r) * em1;
    // sigma (pa + pb) - rho em0           = e0
    // sigma w1 (pa - pb) + rho w0 em0     = w0 e0
    const C a11 = pa + pb, a12 = -em0;
    const C a21 = w1 * (pa - pb), a22 = w0 * em0;
    const C det = a11 * a22 - a12 * a21;
    RectAmplitudes out;
    out.sigma = (e0 * a22 - a12 * w0 * e0) / det;
    out.rho = (a11 * w0 * e0 - a21 * e0) / det;
    return out;
}

// Closed form of the characteristic value for a 50% duty rectangular train
// (trace of the product of two rotation blocks, derived by hand).
double mu_rect_closed_form(double alpha, double x) {
    const double w1 = 1.0 + alpha;
    const double c0 = std::cos(0.5 * x), s0 = std::sin(0.5 * x);
    const double c1 = std::cos(0.5 * w1 * x), s1 = std::sin(0.5 * w1 * x);
    return c0 * c1 - 0.5 * (1.0 / w1 + w1) * s0 * s1;
}

PulseProfile random_pulse(std::mt19937_64& rng, double omega0) {
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    switch (kind(rng)) {
    case 0: {
        const double alpha = u(rng) * 0.5;
        const double duration = 0.2 + 2.8 * u(rng);
        return PulseProfile::rectangular(alpha, duration);
    }
    case 1: {
        const double amp = (2.0 * u(rng) - 0.8) * omega0 * omega0;
        const double width = 0.1 + u(rng);
        return PulseProfile::gaussian(amp, width);
    }
    default: {
        std::vector<double> samples(8);
        for (std::size_t i = 0; i < samples.size(); ++i)
            samples[i] = (2.0 * u(rng) - 0.8) * omega0 * omega0;
        samples.front() = 0.0;
        samples.back() = 0.0;
        return PulseProfile::tabulated(std::move(samples), 0.0, 0.3);
    }
    }
}

} // namespace

TEST_CASE("no modulation means no scattering") {
    const auto quiet = PulseProfile::rectangular(0.0, 2.0);
    const auto s = scatter_pulse(1.0, quiet, 1e-12);
    CHECK(std::abs(s.rho) < 1e-12);
    CHECK(rel_err(s.sigma, C(1.0, 0.0)) < 1e-12);
    CHECK(s.reflection < 1e-12);
}

TEST_CASE("rectangular pulse matches the interface oracle") {
    const double w0 = 1.0;
    const double w1 = 1.5 * w0;
    const double d = std::numbers::pi / w1;
    const auto s = scatter_pulse(w0, PulseProfile::rectangular(0.5, d), 1e-12);
    const auto oracle = rect_interface_oracle(w0, w1, d);
    CHECK(std::abs(s.rho - oracle.rho) < 1e-8);
    CHECK(std::abs(s.sigma - oracle.sigma) < 1e-8);

    // off the reflectionless special point as well
    const double d2 = 1.1;
    const auto s2 = scatter_pulse(w0, PulseProfile::rectangular(0.5, d2), 1e-12);
    const auto oracle2 = rect_interface_oracle(w0, w1, d2);
    CHECK(std::abs(s2.rho - oracle2.rho) < 1e-8);
    CHECK(std::abs(s2.sigma - oracle2.sigma) < 1e-8);
    CHECK(s2.reflection > 1e-3);  // the generic pulse does reflect
}

TEST_CASE("unitarity holds for random pulses of every family") {
    std::mt19937_64 rng(314);
    for (int i = 0; i < 60; ++i) {
        const double omega0 = 0.5 + 1.5 * std::generate_canonical<double, 53>(rng);
        const auto pulse = random_pulse(rng, omega0);
        const auto s = scatter_pulse(omega0, pulse, 1e-10);
        CHECK(s.unitarity_defect <= 1e-9);
        CHECK(s.reflection >= 0.0);
        CHECK(s.reflection < 1.0);
    }
}

TEST_CASE("positivity violations are rejected") {
    // a gaussian dip deeper than the carrier
    const auto dip = PulseProfile::gaussian(-1.5, 0.5);
    CHECK_THROWS_AS(scatter_pulse(1.0, dip, 1e-10), NonPositiveFrequencyError);

    std::vector<double> samples = {0.0, -2.0, 0.0};
    const auto tab = PulseProfile::tabulated(std::move(samples), 0.0, 0.5);
    CHECK_THROWS_AS(scatter_pulse(1.0, tab, 1e-10), NonPositiveFrequencyError);
}

TEST_CASE("halving the tolerance reduces the oracle defect") {
    const double w0 = 1.0, w1 = 1.5;
    const double d = 1.3;
    const auto oracle = rect_interface_oracle(w0, w1, d);
    double prev = 1.0;
    for (double tol : {1e-6, 1e-8, 1e-10}) {
        const auto s = scatter_pulse(w0, PulseProfile::rectangular(0.5, d), tol);
        const double defect = std::abs(s.rho - oracle.rho) + std::abs(s.sigma - oracle.sigma);
        CHECK(defect < prev);
        prev = defect;
    }
    CHECK(prev < 1e-9);
}

TEST_CASE("time reversal leaves the reflection probability unchanged") {
    // gaussian sampled onto a grid, plus its reverse
    std::vector<double> forward(41), reversed(41);
    for (int i = 0; i < 41; ++i) {
        const double t = -2.0 + 0.1 * i;
        forward[i] = 0.8 * std::exp(-t * t) * (1.0 + 0.5 * std::tanh(t));  // asymmetric
    }
    std::reverse_copy(forward.begin(), forward.end(), reversed.begin());
    const auto a = scatter_pulse(1.0, PulseProfile::tabulated(forward, -2.0, 0.1), 1e-11);
    const auto b = scatter_pulse(1.0, PulseProfile::tabulated(reversed, -2.0, 0.1), 1e-11);
    CHECK(std::abs(a.reflection - b.reflection) < 1e-9);

    const auto g = scatter_pulse(1.0, PulseProfile::gaussian(0.7, 0.6), 1e-11);
    CHECK(g.unitarity_defect < 1e-10);
}

TEST_CASE("free monodromy classifies as expected") {
    const double omega0 = 1.0;
    const double tau = std::numbers::pi / 3.0;  // Omega_0 tau = pi/3
    const auto train = PulseTrain::rectangular(0.0, tau);
    const auto f = monodromy(omega0, train, 1e-11);
    CHECK(rel_err(f.mu, 0.5) < 1e-10);
    CHECK(f.classification.is_stable());
    CHECK(rel_err(f.classification.floquet_frequency, omega0) < 1e-9);
    CHECK(f.det_defect < 1e-9);
}

TEST_CASE("rectangular train matches the closed-form characteristic value") {
    for (const auto& [alpha, x] : {std::pair{0.1, 3.0}, {0.1, 3.2}, {0.3, 2.0},
                                   {0.05, 3.05}, {0.2, 6.3}}) {
        const auto train = PulseTrain::rectangular(alpha, x);  // omega0 = 1
        const auto f = monodromy(1.0, train, 1e-11);
        CHECK(std::abs(f.mu - mu_rect_closed_form(alpha, x)) < 1e-9);
        CHECK(f.det_defect < 1e-9);
        CHECK(f.cross_check_defect < 1e-7);
    }
}

TEST_CASE("train offset changes the matrix but not its trace") {
    const double alpha = 0.2, x = 3.0;
    const auto centered = monodromy(1.0, PulseTrain::rectangular(alpha, x), 1e-11);
    const auto shifted =
        monodromy(1.0, PulseTrain::rectangular(alpha, x, 0.5, 0.3), 1e-11);
    CHECK(std::abs(centered.mu - shifted.mu) < 1e-9);
    CHECK(std::abs(centered.monodromy.m01 - shifted.monodromy.m01) > 1e-3);
}

TEST_CASE("first parametric tongue is found by scanning") {
    // alpha = 0.1: the first resonance tongue sits near Omega_0 tau = pi
    bool found_unstable = false;
    double best_gamma = 0.0;
    for (double x = 2.8; x <= 3.3; x += 0.005) {
        const auto f = monodromy(1.0, PulseTrain::rectangular(0.1, x), 1e-10);
        if (f.classification.is_unstable()) {
            found_unstable = true;
            best_gamma = std::max(best_gamma, f.classification.growth_rate);
            CHECK(f.classification.sign == -1);  // period-doubling branch
        }
    }
    CHECK(found_unstable);
    CHECK(best_gamma > 0.0);
}

TEST_CASE("classification of frozen characteristic values") {
    const auto stable = classify(0.5, 1.0);
    CHECK(stable.is_stable());
    CHECK(rel_err(stable.floquet_frequency, 1.0471975511965979) < 1e-15);

    const auto unstable = classify(1.2, 1.0);
    CHECK(unstable.is_unstable());
    CHECK(unstable.sign == +1);
    CHECK(rel_err(unstable.growth_rate, 0.62236250371477867) < 1e-14);

    const auto doubling = classify(-1.3, 2.0);
    CHECK(doubling.is_unstable());
    CHECK(doubling.sign == -1);
    CHECK(rel_err(doubling.growth_rate, 0.37821645542847979) < 1e-14);

    CHECK(classify(1.0, 1.0).is_marginal());
    CHECK(classify(-1.0 - 5e-11, 1.0).is_marginal());
    CHECK_THROWS_AS(classify(0.5, 0.0), DomainError);
}

TEST_CASE("net production rate") {
    CHECK(net_production_rate(0.0, 1.0, 100.0) == -0.01);
    CHECK(net_production_rate(5e-5, 1.0, 1e4) == 0.0);
    CHECK(rel_err(net_production_rate(0.025, 1.0, 1e4), 0.0499) < 1e-12);
    CHECK_THROWS_AS(net_production_rate(-1.0, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(net_production_rate(1.0, 1.0, 0.0), DomainError);
}

TEST_CASE("stability chart basics") {
    const auto cells = stability_chart(1.0, 0.0, 0.3, 1.0, 7.0, 8, 10, 0.5, 1e-9);
    REQUIRE(cells.size() == 80);

    // row-major ordering
    CHECK(cells[0].alpha == 0.0);
    CHECK(cells[0].omega0_tau == 1.0);
    CHECK(cells[9].omega0_tau == 7.0);
    CHECK(cells[10].alpha > 0.0);

    // alpha = 0 row: stable or marginal only
    for (int ix = 0; ix < 10; ++ix) {
        const auto& cell = cells[ix];
        CHECK((cell.kind == FloquetClass::Kind::stable ||
               cell.kind == FloquetClass::Kind::marginal));
        CHECK_FALSE(cell.error);
    }

    // somewhere in the scan an unstable tongue shows up
    CHECK(std::any_of(cells.begin(), cells.end(), [](const ChartCell& c) {
        return c.kind == FloquetClass::Kind::unstable;
    }));

    // minimal grid is accepted
    CHECK(stability_chart(1.0, 0.0, 0.1, 1.0, 2.0, 2, 2).size() == 4);
    CHECK_THROWS_AS(stability_chart(1.0, 0.0, 0.1, 1.0, 2.0, 1, 2), DomainError);
}

TEST_CASE("chart records per-cell failures instead of aborting") {
    // alpha <= -1 cannot be realized as a pulse; every cell reports an error
    const auto cells = stability_chart(1.0, -1.5, -1.2, 1.0, 2.0, 2, 3);
    REQUIRE(cells.size() == 6);
    for (const auto& c : cells) {
        CHECK(c.error);
        CHECK(c.class_label() == "error");
        CHECK_FALSE(c.error_message.empty());
    }
}

TEST_CASE("pulse train validation") {
    CHECK_THROWS_AS(PulseTrain(PulseProfile::rectangular(0.1, 3.0), 2.0), DomainError);
    CHECK_THROWS_AS(PulseTrain(PulseProfile::rectangular(0.1, 1.0), 2.0, 0.8), DomainError);
    CHECK_THROWS_AS(PulseTrain::rectangular(0.1, 1.0, 1.5), DomainError);
    CHECK_THROWS_AS(PulseTrain(PulseProfile::rectangular(0.1, 1.0), 2.0, 0.0, 0), DomainError);
}
