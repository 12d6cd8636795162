#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include "cavmode/response.hpp"
#include "test_helpers.hpp"

using namespace cavmode;
using test_helpers::rel_err;
using C = std::complex<double>;

namespace {

// Independent dispersion oracle for the Drude spectrum: the partial-fraction
// identity  int_0^inf w^2 / ((w^2 + a^2)(w^2 + y^2)) dw = pi / (2 (a + y))
// gives Pi(i y) = Gamma0 / (tau_c (1 + y tau_c)).
double drude_pi_imag_axis(double gamma0, double tau_c, double y) {
    return gamma0 / (tau_c * (1.0 + y * tau_c));
}

// Drude Re Gamma sampled onto a grid, for the tabulated variant.
DampingModel tabulated_from_drude(double gamma0, double tau_c, double w_max,
                                  std::size_t n) {
    std::vector<double> omega(n), values(n);
    for (std::size_t i = 0; i < n; ++i) {
        omega[i] = w_max * static_cast<double>(i) / static_cast<double>(n - 1);
        const double x = omega[i] * tau_c;
        values[i] = gamma0 / (1.0 + x * x);
    }
    return DampingModel::tabulated(std::move(omega), std::move(values), 2.0);
}

} // namespace

TEST_CASE("drude dispersion quadrature matches the closed form on the imaginary axis") {
    const double gamma0 = 0.2, tau_c = 1.0;
    const auto model = DampingModel::drude(gamma0, tau_c);
    SelfEnergyOptions opt;
    opt.abs_floor = 1e-16;

    for (double y : {0.0, 0.1, 1.0, 10.0, 100.0}) {
        const C pi = self_energy(model, C(0.0, y), opt);
        const double ref = drude_pi_imag_axis(gamma0, tau_c, y);
        CHECK(rel_err(pi.real(), ref) < 1e-8);
        CHECK(std::abs(pi.imag()) < 1e-10);
    }
}

TEST_CASE("spot values of the drude self-energy") {
    const auto model = DampingModel::drude(0.2, 1.0);
    SelfEnergyOptions opt;
    opt.abs_floor = 1e-16;

    const C at_i = self_energy(model, C(0.0, 1.0), opt);
    CHECK(rel_err(at_i.real(), 0.1) < 1e-9);

    const C at_zero = self_energy(model, C(0.0, 0.0), opt);
    CHECK(rel_err(at_zero.real(), 0.2) < 1e-9);
}

TEST_CASE("zero spectral density gives zero self-energy") {
    const auto model = DampingModel::drude(0.0, 2.0);
    for (C zeta : {C(0.0, 1.0), C(1.0, 0.0), C(0.5, 0.5)}) {
        const C pi = self_energy(model, zeta, {1e-9, 1e-18, 4000});
        CHECK(std::abs(pi) < 1e-15);
    }
}

TEST_CASE("self-energy rejects the lower half plane") {
    const auto model = DampingModel::drude(0.1, 1.0);
    CHECK_THROWS_AS(self_energy(model, C(1.0, -0.1)), DomainError);
}

TEST_CASE("real-axis self-energy is consistent with the imaginary axis") {
    // Kramers-Kronig: both axes derive from the same spectral density.  The
    // real-axis principal value at w0 equals the analytic continuation of
    // the Drude form  Pi(zeta) = Gamma0 / (tau_c (1 - i zeta tau_c)).
    const double gamma0 = 0.3, tau_c = 0.7;
    const auto model = DampingModel::drude(gamma0, tau_c);
    SelfEnergyOptions opt;
    opt.abs_floor = 1e-16;

    for (double w0 : {0.2, 1.0, 5.0}) {
        const C pi = self_energy(model, C(w0, 0.0), opt);
        const C ref = gamma0 / (tau_c * (1.0 - C(0.0, 1.0) * w0 * tau_c));
        CHECK(rel_err(pi, ref) < 1e-8);
    }
}

TEST_CASE("passivity: Im Pi >= 0 on the positive real axis") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> g(0.0, 5.0), t(0.05, 20.0), w(0.0, 50.0);
    for (int i = 0; i < 50; ++i) {
        const auto model = DampingModel::drude(g(rng), t(rng));
        CHECK(model.im_pi(w(rng)) >= 0.0);
    }
    const auto tab = tabulated_from_drude(1.0, 2.0, 20.0, 40);
    for (double omega : {0.1, 1.0, 15.0, 100.0})
        CHECK(tab.im_pi(omega) >= 0.0);
}

TEST_CASE("propagator limits and pole detection") {
    const CavityMode mode(1.0, 4.0);  // Omega_inf = 2, Lambda = 0.25
    const auto lossless = DampingModel::drude(0.0, 1.0);

    const auto at_zero = propagator(mode, lossless, C(0.0, 0.0));
    CHECK(rel_err(at_zero.value.real(), mode.inductance() / mode.light_speed()) < 1e-12);
    CHECK_FALSE(at_zero.pole_proximity);

    const auto at_pole = propagator(mode, lossless, C(mode.bare_frequency(), 0.0));
    CHECK(at_pole.pole_proximity);
}

TEST_CASE("propagator high-frequency asymptote") {
    const CavityMode mode(1.0, 4.0);
    const auto model = DampingModel::drude(0.2, 1.0);
    const double y = 1e3 * mode.bare_frequency();
    const auto d = propagator(mode, model, C(0.0, y));
    const double asymptote = (mode.inductance() / mode.light_speed()) *
                             mode.bare_frequency_squared() / (y * y);
    CHECK(rel_err(std::abs(d.value), asymptote) < 0.01);
}

TEST_CASE("propagator satisfies its own dispersion relation") {
    // D(iy) computed directly vs reconstructed from Im D(w + i0+) with an
    // independent quadrature.
    const CavityMode mode(1.0, 4.0);
    const auto model = DampingModel::drude(0.5, 1.0);

    auto im_d = [&](double w) {
        return propagator(mode, model, C(w, 0.0)).value.imag();
    };
    for (double y : {0.5, 2.0}) {
        auto integrand = [&](double w) { return w * im_d(w) / (w * w + y * y); };
        // split near the resonance so the oracle resolves the peak
        const double wr = mode.bare_frequency();
        double total = 0.0;
        total += test_helpers::adaptive_simpson(integrand, 0.0, 0.5 * wr, 1e-11);
        total += test_helpers::adaptive_simpson(integrand, 0.5 * wr, 2.0 * wr, 1e-11);
        total += test_helpers::adaptive_simpson(integrand, 2.0 * wr, 50.0 * wr, 1e-11);
        // tail: |D| ~ (Lambda/c) W^2/w^2, Im D falls faster; estimate by power law
        const double reconstructed = (2.0 / std::numbers::pi) * total;
        const double direct = propagator(mode, model, C(0.0, y)).value.real();
        CHECK(rel_err(reconstructed, direct) < 1e-6);
    }
}

TEST_CASE("dielectric function identities") {
    const CavityMode mode(1.0, 4.0);
    const auto lossless = DampingModel::drude(0.0, 1.0);
    CHECK(rel_err(dielectric(mode, lossless, C(0.7, 0.4)), C(1.0, 0.0)) < 1e-12);

    const auto model = DampingModel::drude(0.2, 1.0);
    const C eps = dielectric(mode, model, C(0.0, 1.0));
    CHECK(rel_err(eps, C(0.9, 0.0)) < 1e-9);

    CHECK_THROWS_AS(dielectric(mode, model, C(0.0, 0.0)), DomainError);

    // -i zeta eps C + i zeta C = Y(zeta) = -i C Pi / zeta
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> re(-3.0, 3.0), im(0.1, 3.0);
    for (int i = 0; i < 10; ++i) {
        const C zeta(re(rng), im(rng));
        const C lhs = -C(0.0, 1.0) * zeta * dielectric(mode, model, zeta) *
                          mode.capacitance() +
                      C(0.0, 1.0) * zeta * mode.capacitance();
        const C rhs = admittance(mode, model, zeta);
        CHECK(rel_err(lhs, rhs) < 1e-12);
    }
}

TEST_CASE("renormalization of a drude-damped mode") {
    const CavityMode mode(1.0, 4.0);  // Omega_inf = 2
    const auto model = DampingModel::drude(0.2, 1.0);
    const auto r = renormalize(mode, model);
    CHECK(rel_err(r.shifted_frequency * r.shifted_frequency, 3.8) < 1e-12);
    CHECK(r.sum_rule_residual < 1e-9);
    REQUIRE(r.quality_factor.has_value());
    // Q = Omega_0 / Re Gamma(Omega_0) with Re Gamma = 0.2/(1+3.8)
    CHECK(rel_err(*r.quality_factor, std::sqrt(3.8) * 4.8 / 0.2) < 1e-12);
    CHECK(r.weak_damping);
}

TEST_CASE("renormalization flags the lossless and unstable cases") {
    const CavityMode mode(1.0, 4.0);
    const auto lossless = DampingModel::drude(0.0, 1.0);
    const auto r = renormalize(mode, lossless);
    CHECK(r.shifted_frequency == mode.bare_frequency());
    CHECK_FALSE(r.quality_factor.has_value());
    CHECK(r.weak_damping);
    CHECK(r.sum_rule_residual == 0.0);

    const auto strong = DampingModel::drude(10.0, 1.0);  // Pi(0) = 10 > 4
    CHECK_THROWS_AS(renormalize(mode, strong), UnstableStaticError);
}

TEST_CASE("tabulated spectra follow their drude source") {
    const double gamma0 = 0.4, tau_c = 1.0;
    const auto tab = tabulated_from_drude(gamma0, tau_c, 60.0, 4001);
    // interpolation + declared p = 2 tail vs the closed form
    for (double y : {0.0, 0.5, 2.0}) {
        CHECK(rel_err(tab.pi_imag_axis(y), drude_pi_imag_axis(gamma0, tau_c, y)) < 5e-4);
    }
}

TEST_CASE("sum rule holds for every built-in model family") {
    const CavityMode mode(1.0, 9.0);  // Omega_inf = 3
    const auto drude = DampingModel::drude(0.3, 2.0);
    CHECK(renormalize(mode, drude).sum_rule_residual < 1e-6);

    const auto tab = tabulated_from_drude(0.3, 2.0, 40.0, 2001);
    CHECK(renormalize(mode, tab).sum_rule_residual < 1e-6);
}

TEST_CASE("damping CSV loader") {
    std::stringstream ss(
        "# p=2.5\n"
        "omega,re_gamma\n"
        "0,1.0\n"
        "1,0.5\n"
        "2,0.2\n");
    const auto model = load_damping_spectrum(ss);
    CHECK(model.kind() == DampingModel::Kind::tabulated);
    CHECK(model.tail_exponent() == 2.5);
    CHECK(model.re_gamma(0.5) == 0.75);
    // beyond the table: power-law tail
    CHECK(rel_err(model.re_gamma(4.0), 0.2 * std::pow(0.5, 2.5)) < 1e-14);

    std::stringstream bad("omega,re_gamma\n0,1\n1,1\n");
    CHECK_THROWS_AS(load_damping_spectrum(bad), DomainError);

    std::stringstream negative("# p=2\nomega,re_gamma\n0,1\n1,-0.1\n");
    CHECK_THROWS_AS(load_damping_spectrum(negative), DomainError);
}
