#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <istream>
#include <numbers>
#include <ostream>
#include <vector>

#include "cavmode/errors.hpp"
#include "cavmode/io.hpp"
#include "cavmode/units.hpp"

namespace cavmode {

/// Uniform rectilinear 3D sampling grid.
struct Grid3 {
    std::size_t nx = 0, ny = 0, nz = 0;
    double dx = 0.0, dy = 0.0, dz = 0.0;

    std::size_t size() const noexcept { return nx * ny * nz; }
    double cell_volume() const noexcept { return dx * dy * dz; }

    void validate() const {
        if (nx < 2 || ny < 2 || nz < 2)
            throw DomainError("grid needs at least 2 points per axis");
        if (!(dx > 0.0) || !(dy > 0.0) || !(dz > 0.0))
            throw DomainError("grid spacings must be strictly positive");
    }
};

/// Sampled mode function K(r) and its curl on a shared grid.
///
/// Samples are stored row-major with z fastest:
/// index = (ix * ny + iy) * nz + iz.
struct ModeFunctionSamples {
    Grid3 grid;
    std::vector<std::array<double, 3>> field;  ///< K
    std::vector<std::array<double, 3>> curl;   ///< curl K

    void validate() const {
        grid.validate();
        if (field.size() != grid.size() || curl.size() != grid.size())
            throw DomainError("mode samples do not match the declared grid shape");
    }
};

/// Single LC-oscillator description of one cavity mode.
///
/// The bare frequency is derived from the stored circuit constants, so
/// Omega_inf^2 = c^2 / (Lambda C) holds by construction.
class CavityMode {
public:
    CavityMode(double capacitance, double inverse_inductance, double light_speed = 1.0)
        : capacitance_(capacitance),
          inverse_inductance_(inverse_inductance),
          light_speed_(light_speed) {
        if (!(capacitance > 0.0))
            throw DomainError("CavityMode: capacitance must be positive");
        if (!(inverse_inductance > 0.0))
            throw DomainError("CavityMode: inverse inductance must be positive");
        if (!(light_speed > 0.0))
            throw DomainError("CavityMode: light speed must be positive");
        bare_frequency_ = light_speed * std::sqrt(inverse_inductance_ / capacitance_);
    }

    double capacitance() const noexcept { return capacitance_; }
    double inverse_inductance() const noexcept { return inverse_inductance_; }
    double inductance() const noexcept { return 1.0 / inverse_inductance_; }
    double bare_frequency() const noexcept { return bare_frequency_; }
    double bare_frequency_squared() const noexcept { return bare_frequency_ * bare_frequency_; }
    double light_speed() const noexcept { return light_speed_; }

private:
    double capacitance_;
    double inverse_inductance_;
    double light_speed_;
    double bare_frequency_;
};

/// Circuit constants from sampled mode functions.
///
/// C = (1/4pi) Int |K|^2 d3r and 1/Lambda = (1/4pi) Int |curl K|^2 d3r by a
/// composite midpoint rule (each sample weighted with one grid cell), then
/// Omega_inf = c / sqrt(Lambda C).
inline CavityMode mode_constants(const ModeFunctionSamples& samples,
                                 const UnitSystem& units = UnitSystem::natural()) {
    samples.validate();

    const double dv = samples.grid.cell_volume();
    double field_sq = 0.0;
    double curl_sq = 0.0;
    // Kahan compensation keeps the roundoff floor well below the
    // convergence-test resolution on large grids.
    double cf = 0.0, cc = 0.0;
    for (std::size_t i = 0; i < samples.field.size(); ++i) {
        const auto& k = samples.field[i];
        const auto& ck = samples.curl[i];
        const double a = k[0] * k[0] + k[1] * k[1] + k[2] * k[2] - cf;
        const double tf = field_sq + a;
        cf = (tf - field_sq) - a;
        field_sq = tf;
        const double b = ck[0] * ck[0] + ck[1] * ck[1] + ck[2] * ck[2] - cc;
        const double tc = curl_sq + b;
        cc = (tc - curl_sq) - b;
        curl_sq = tc;
    }

    const double four_pi = 4.0 * std::numbers::pi;
    const double capacitance = field_sq * dv / four_pi;
    const double inverse_inductance = curl_sq * dv / four_pi;

    if (!(capacitance > 0.0))
        throw ZeroFieldError("mode_constants: |K|^2 integral vanished");
    if (!(inverse_inductance > 0.0))
        throw ZeroCurlError("mode_constants: |curl K|^2 integral vanished");

    return CavityMode(capacitance, inverse_inductance, units.light_speed());
}

/// Built-in cube test mode K = z_hat sqrt(2) sin(pi x / L), sampled at the
/// n^3 cell centers of a side-L cube.
inline ModeFunctionSamples make_sine_test_mode(std::size_t n, double side) {
    if (n < 2)
        throw DomainError("make_sine_test_mode: need n >= 2");
    if (!(side > 0.0))
        throw DomainError("make_sine_test_mode: need side > 0");

    ModeFunctionSamples s;
    const double d = side / static_cast<double>(n);
    s.grid = {n, n, n, d, d, d};
    s.field.resize(s.grid.size());
    s.curl.resize(s.grid.size());

    const double pi_over_l = std::numbers::pi / side;
    const double amp = std::sqrt(2.0);
    for (std::size_t ix = 0; ix < n; ++ix) {
        const double x = (static_cast<double>(ix) + 0.5) * d;
        const double kz = amp * std::sin(pi_over_l * x);
        const double cy = amp * pi_over_l * std::cos(pi_over_l * x);
        for (std::size_t iy = 0; iy < n; ++iy) {
            for (std::size_t iz = 0; iz < n; ++iz) {
                const std::size_t idx = (ix * n + iy) * n + iz;
                s.field[idx] = {0.0, 0.0, kz};
                s.curl[idx] = {0.0, cy, 0.0};
            }
        }
    }
    return s;
}

/// Loads mode samples from CSV with header x,y,z,Kx,Ky,Kz,cKx,cKy,cKz and a
/// sidecar block declaring nx,ny,nz,dx,dy,dz.
inline ModeFunctionSamples load_mode_samples(std::istream& in) {
    const CsvTable table = read_csv(in);

    const std::vector<std::string> expected = {"x",   "y",   "z",   "Kx", "Ky",
                                               "Kz",  "cKx", "cKy", "cKz"};
    if (table.header != expected)
        throw DomainError("mode CSV header must be x,y,z,Kx,Ky,Kz,cKx,cKy,cKz");

    ModeFunctionSamples s;
    s.grid.nx = static_cast<std::size_t>(table.sidecar_number("nx"));
    s.grid.ny = static_cast<std::size_t>(table.sidecar_number("ny"));
    s.grid.nz = static_cast<std::size_t>(table.sidecar_number("nz"));
    s.grid.dx = table.sidecar_number("dx");
    s.grid.dy = table.sidecar_number("dy");
    s.grid.dz = table.sidecar_number("dz");
    s.grid.validate();

    if (table.rows.size() != s.grid.size())
        throw DomainError("mode CSV has " + std::to_string(table.rows.size()) +
                          " rows, expected " + std::to_string(s.grid.size()));

    s.field.reserve(table.rows.size());
    s.curl.reserve(table.rows.size());
    for (const auto& row : table.rows) {
        s.field.push_back({row[3], row[4], row[5]});
        s.curl.push_back({row[6], row[7], row[8]});
    }
    return s;
}

/// Writes mode samples in the format accepted by load_mode_samples.
inline void write_mode_samples(std::ostream& out, const ModeFunctionSamples& s) {
    s.validate();
    out << "# nx=" << s.grid.nx << "\n# ny=" << s.grid.ny << "\n# nz=" << s.grid.nz
        << "\n# dx=" << format_double(s.grid.dx) << "\n# dy=" << format_double(s.grid.dy)
        << "\n# dz=" << format_double(s.grid.dz) << "\n";
    out << "x,y,z,Kx,Ky,Kz,cKx,cKy,cKz\n";
    for (std::size_t ix = 0; ix < s.grid.nx; ++ix) {
        for (std::size_t iy = 0; iy < s.grid.ny; ++iy) {
            for (std::size_t iz = 0; iz < s.grid.nz; ++iz) {
                const std::size_t idx = (ix * s.grid.ny + iy) * s.grid.nz + iz;
                const double x = (static_cast<double>(ix) + 0.5) * s.grid.dx;
                const double y = (static_cast<double>(iy) + 0.5) * s.grid.dy;
                const double z = (static_cast<double>(iz) + 0.5) * s.grid.dz;
                out << format_double(x) << ',' << format_double(y) << ','
                    << format_double(z);
                for (double v : s.field[idx])
                    out << ',' << format_double(v);
                for (double v : s.curl[idx])
                    out << ',' << format_double(v);
                out << '\n';
            }
        }
    }
}

} // namespace cavmode
