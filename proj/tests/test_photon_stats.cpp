#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "cavmode/floquet.hpp"
#include "cavmode/photon_stats.hpp"
#include "test_helpers.hpp"

using namespace cavmode;
using test_helpers::rel_err;

TEST_CASE("noise temperature inverts the boltzmann factor") {
    const double omega0 = 1.0;
    CHECK(rel_err(noise_temperature(std::exp(-1.0), omega0), omega0) < 1e-14);
    CHECK(noise_temperature(0.0, omega0) == 0.0);
    CHECK(rel_err(noise_temperature(0.5, omega0), 1.4426950408889634) < 1e-14);
    CHECK_THROWS_AS(noise_temperature(1.0, omega0), DomainError);
    CHECK_THROWS_AS(noise_temperature(-0.1, omega0), DomainError);
}

TEST_CASE("planck occupation and temperature are exact inverses") {
    const double omega0 = 2.7;
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> mag(-6.0, 12.0);
    double worst = 0.0;
    for (int i = 0; i < 1'000'000; ++i) {
        const double n = std::pow(10.0, mag(rng));
        const double back = planck_occupation(planck_temperature(n, omega0), omega0);
        worst = std::max(worst, rel_err(back, n));
    }
    CHECK(worst <= 1e-12);
    CHECK(planck_occupation(0.0, omega0) == 0.0);
    CHECK(planck_temperature(0.0, omega0) == 0.0);
}

TEST_CASE("cold cavity heats to the pair yield") {
    const auto h = heat_cavity(0.5, 1.0, 0.0);
    CHECK(h.n_initial == 0.0);
    CHECK(rel_err(h.n_final, h.mean_pairs) < 1e-15);
    CHECK(rel_err(h.mean_pairs, 1.0) < 1e-15);  // R/(1-R) at R = 1/2
    CHECK(rel_err(h.t_final_approx, h.t_star) < 1e-15);
}

TEST_CASE("enhancement spot values from the coth form") {
    const double omega0 = 1.0;
    // T_i = Omega_0 / 2 -> coth(1); T_i = Omega_0 -> coth(1/2)
    const auto half = heat_cavity(0.5, omega0, 0.5);
    CHECK(rel_err(half.t_final_approx / half.t_star, 1.3130352854993313) < 1e-14);
    const auto unit = heat_cavity(0.5, omega0, 1.0);
    CHECK(rel_err(unit.t_final_approx / unit.t_star, 2.1639534137386528) < 1e-14);
}

TEST_CASE("heating is monotone in reflection and initial occupation") {
    double prev = -1.0;
    for (double r : {0.0, 0.1, 0.3, 0.6, 0.9}) {
        const auto h = heat_cavity(r, 1.0, 0.7);
        CHECK(h.n_final > prev);
        prev = h.n_final;
    }
    prev = -1.0;
    for (double ti : {0.0, 0.3, 0.8, 2.0, 10.0}) {
        const auto h = heat_cavity(0.4, 1.0, ti);
        CHECK(h.n_final > prev);
        CHECK(h.n_final >= h.n_initial);  // modulation never cools
        prev = h.n_final;
    }
}

TEST_CASE("exact final temperature round-trips through the occupation") {
    for (double ti : {0.0, 0.5, 2.0}) {
        const auto h = heat_cavity(0.3, 1.3, ti);
        CHECK(rel_err(planck_occupation(h.t_final, 1.3), h.n_final) < 1e-12);
    }
}

TEST_CASE("enhancement curve endpoints and regimes") {
    const double omega0 = 1.0;

    {
        // first row at T_i = 0: both ratios are 1
        const auto curve = enhancement_curve(omega0, 20.0, 0.0, 5.0, 11);
        // at T_i = 0 the final occupation is exactly the Planck occupation
        // at T*, so both columns are exactly 1
        CHECK(rel_err(curve.front().ratio_approx, 1.0) < 1e-12);
        CHECK(rel_err(curve.front().ratio_exact, 1.0) < 1e-12);
        // monotone non-decreasing
        for (std::size_t i = 1; i < curve.size(); ++i) {
            CHECK(curve[i].ratio_exact >= curve[i - 1].ratio_exact - 1e-12);
            CHECK(curve[i].ratio_approx >= curve[i - 1].ratio_approx - 1e-12);
        }
    }

    {
        // deep in the validity regime T* = 100 Omega_0 the two columns agree
        const auto curve = enhancement_curve(omega0, 100.0, 0.0, 5.0, 26);
        for (const auto& p : curve)
            CHECK(rel_err(p.ratio_approx, p.ratio_exact) < 0.02);
    }

    {
        // classical asymptote: ratio -> 2 T_i / Omega_0
        const auto curve = enhancement_curve(omega0, 100.0, 50.0, 80.0, 4);
        for (const auto& p : curve)
            CHECK(rel_err(p.ratio_approx, 2.0 * p.kTi_over_E) < 0.01);
    }

    CHECK_THROWS_AS(enhancement_curve(omega0, 10.0, 0.0, 5.0, 1), DomainError);
    CHECK_THROWS_AS(enhancement_curve(omega0, 10.0, -1.0, 5.0, 5), DomainError);
}

TEST_CASE("approximation error shrinks as T* grows") {
    const double omega0 = 1.0;
    const double ti = 2.0;
    double prev_gap = 1.0;
    for (double tstar : {10.0, 100.0, 1000.0}) {
        const double r = std::exp(-omega0 / tstar);
        const auto h = heat_cavity(r, omega0, ti);
        const double gap = rel_err(h.t_final_approx, h.t_final);
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
}

TEST_CASE("validity flag follows the large-margin inequality") {
    CHECK(heat_cavity(std::exp(-1.0 / 10.5), 1.0, 0.0).approx_valid);
    CHECK_FALSE(heat_cavity(std::exp(-1.0 / 9.5), 1.0, 0.0).approx_valid);
}

TEST_CASE("a zero pulse neither creates pairs nor heats") {
    const auto s = scatter_pulse(1.0, PulseProfile::rectangular(0.0, 1.0), 1e-11);
    const auto h = heat_cavity(s.reflection, 1.0, 0.8);
    CHECK(h.t_star < 1e-5);
    CHECK(rel_err(h.n_final, h.n_initial) < 1e-9);
    CHECK(rel_err(h.t_final, 0.8) < 1e-9);
}

TEST_CASE("pulsed noise temperature growth and saturation") {
    const double omega0 = 1.0;
    CHECK(pulsed_noise_temperature(0, 1.0, 0.5, omega0).value == omega0);

    // damping dominated: decays below Omega_0
    CHECK(pulsed_noise_temperature(10, 1.0, -0.2, omega0).value < omega0);

    // tau Gamma_1 = 0.025, n_p = 400 -> e^10
    const auto grown = pulsed_noise_temperature(400, 1.0, 0.025, omega0);
    CHECK_FALSE(grown.saturated);
    CHECK(rel_err(grown.value, 22026.465794806718) < 1e-12);

    const auto melt = pulsed_noise_temperature(100000, 1.0, 1.0, omega0);
    CHECK(melt.saturated);
    CHECK(std::isfinite(melt.value));

    CHECK_THROWS_AS(pulsed_noise_temperature(-1, 1.0, 0.1, omega0), DomainError);
}
