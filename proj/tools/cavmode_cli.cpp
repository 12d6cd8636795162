// Command-line front end: parses a run configuration, dispatches to the
// library, and emits CSV/JSON artifacts with deterministic formatting.
//
// Exit codes: 0 success, 2 validation error, 3 numerical failure,
// 4 flagged physical instability (static instability, zero nonlinearity).

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cavmode/cavmode.hpp"

using json = nlohmann::ordered_json;
using namespace cavmode;

namespace {

constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
    exit_ok = 0,
    exit_validation = 2,
    exit_numerical = 3,
    exit_instability = 4,
};

struct OutputSpec {
    std::string path;
    std::string format;   // "csv" or "json"
    std::string units;    // "natural" or "si"

    UnitSystem unit_system() const {
        return units == "si" ? UnitSystem::si() : UnitSystem::natural();
    }
    bool si() const { return units == "si"; }
};

// Deterministic float formatting for CSV artifacts (shortest round-trip).
std::string fmt(double x) { return format_double(x); }

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw DomainError("cannot open output file '" + path + "'");
    out << contents;
}

std::string provenance(const std::string& command,
                       const std::map<std::string, std::string>& params) {
    std::ostringstream ss;
    ss << "# command=" << command << "\n";
    for (const auto& [k, v] : params)
        ss << "# " << k << "=" << v << "\n";
    ss << "# version=" << kVersion << "\n";
    return ss.str();
}

void emit_json(const OutputSpec& out, const json& j, const std::string& summary) {
    write_file(out.path, j.dump(2) + "\n");
    std::cout << summary << " -> " << out.path << "\n";
}

void emit_csv(const OutputSpec& out, const std::string& body,
              const std::string& summary) {
    write_file(out.path, body);
    std::cout << summary << " -> " << out.path << "\n";
}

// ---------------------------------------------------------------------------
// damping model flags shared by response and free-energy

struct DampingFlags {
    double gamma0 = -1.0;
    double tau_c = -1.0;
    std::string csv_path;

    DampingModel build() const {
        if (!csv_path.empty()) {
            std::ifstream in(csv_path);
            if (!in)
                throw DomainError("cannot open damping CSV '" + csv_path + "'");
            return load_damping_spectrum(in);
        }
        if (gamma0 < 0.0 || tau_c <= 0.0)
            throw DomainError("need either --damping-csv or --gamma0 with --tau-c");
        return DampingModel::drude(gamma0, tau_c);
    }

    void add_to(CLI::App* cmd) {
        cmd->add_option("--gamma0", gamma0, "Drude damping amplitude (1/time)");
        cmd->add_option("--tau-c", tau_c, "Drude correlation time");
        cmd->add_option("--damping-csv", csv_path,
                        "tabulated spectrum CSV (omega,re_gamma with # p=...)");
    }
};

// pulse flags shared by scatter

struct PulseFlags {
    std::string kind = "rect";
    double alpha = 0.1;
    double duration = 1.0;
    double amplitude = 0.0;
    double width = 1.0;
    std::string table_path;

    PulseProfile build() const {
        if (kind == "rect")
            return PulseProfile::rectangular(alpha, duration);
        if (kind == "gauss")
            return PulseProfile::gaussian(amplitude, width);
        if (kind == "table") {
            std::ifstream in(table_path);
            if (!in)
                throw DomainError("cannot open pulse table '" + table_path + "'");
            const CsvTable t = read_csv(in);
            if (t.header != std::vector<std::string>{"t", "nu_sq"})
                throw DomainError("pulse table header must be t,nu_sq");
            if (t.rows.size() < 2)
                throw DomainError("pulse table needs at least 2 rows");
            const double dt = t.rows[1][0] - t.rows[0][0];
            if (!(dt > 0.0))
                throw DomainError("pulse table times must increase");
            std::vector<double> samples;
            samples.reserve(t.rows.size());
            for (std::size_t i = 0; i < t.rows.size(); ++i) {
                if (i > 0) {
                    const double step = t.rows[i][0] - t.rows[i - 1][0];
                    if (std::abs(step - dt) > 1e-9 * dt)
                        throw DomainError("pulse table grid must be uniform");
                }
                samples.push_back(t.rows[i][1]);
            }
            return PulseProfile::tabulated(std::move(samples), t.rows[0][0], dt);
        }
        throw DomainError("unknown pulse kind '" + kind + "'");
    }

    void add_to(CLI::App* cmd) {
        cmd->add_option("--pulse", kind, "pulse family: rect, gauss, table")
            ->check(CLI::IsMember({"rect", "gauss", "table"}));
        cmd->add_option("--alpha", alpha, "fractional frequency step (rect)");
        cmd->add_option("--duration", duration, "stepped-window duration (rect)");
        cmd->add_option("--amp", amplitude, "peak of nu^2 (gauss)");
        cmd->add_option("--width", width, "gaussian width (time)");
        cmd->add_option("--table-csv", table_path, "tabulated nu^2 CSV (t,nu_sq)");
    }
};

// ---------------------------------------------------------------------------

int run_mode(const OutputSpec& out, const std::string& input, int demo_n,
             double demo_side) {
    ModeFunctionSamples samples;
    if (!input.empty()) {
        std::ifstream in(input);
        if (!in)
            throw DomainError("cannot open mode CSV '" + input + "'");
        samples = load_mode_samples(in);
    } else if (demo_n > 0) {
        samples = make_sine_test_mode(static_cast<std::size_t>(demo_n), demo_side);
    } else {
        throw DomainError("mode: need --input or --demo-sine");
    }

    const CavityMode mode = mode_constants(samples, out.unit_system());
    const std::string summary = "mode: bare_frequency=" + fmt(mode.bare_frequency());

    if (out.format == "csv") {
        std::map<std::string, std::string> params;
        params["units"] = out.units;
        std::string body = provenance("mode", params);
        body += "capacitance,inverse_inductance,bare_frequency\n";
        body += fmt(mode.capacitance()) + "," + fmt(mode.inverse_inductance()) + "," +
                fmt(mode.bare_frequency()) + "\n";
        emit_csv(out, body, summary);
    } else {
        json j;
        j["command"] = "mode";
        j["units"] = out.units;
        j["capacitance"] = mode.capacitance();
        j["inverse_inductance"] = mode.inverse_inductance();
        j["bare_frequency"] = mode.bare_frequency();
        emit_json(out, j, summary);
    }
    return exit_ok;
}

int run_response(const OutputSpec& out, double omega_inf, double capacitance,
                 const DampingFlags& damping) {
    if (!(omega_inf > 0.0))
        throw DomainError("response: need --omega-inf > 0");
    const CavityMode mode(capacitance, capacitance * omega_inf * omega_inf);
    const DampingModel model = damping.build();
    const Renormalization r = renormalize(mode, model);

    json j;
    j["command"] = "response";
    j["units"] = out.units;
    j["omega_inf"] = omega_inf;
    j["omega0"] = r.shifted_frequency;
    j["pi_zero"] = r.pi_at_zero;
    if (r.quality_factor)
        j["quality_factor"] = *r.quality_factor;
    else
        j["quality_factor"] = nullptr;
    j["weak_damping"] = r.weak_damping;
    j["sum_rule_residual"] = r.sum_rule_residual;
    emit_json(out, j, "response: omega0=" + fmt(r.shifted_frequency));
    return exit_ok;
}

int run_free_energy(const OutputSpec& out, double omega_inf, double t_min,
                    double t_max, int n_temps, double rel_tol,
                    const DampingFlags& damping) {
    if (!(omega_inf > 0.0))
        throw DomainError("free-energy: need --omega-inf > 0");
    if (n_temps < 1 || !(t_min > 0.0) || t_max < t_min)
        throw DomainError("free-energy: need 0 < --t-min <= --t-max and --n >= 1");

    const auto units = out.unit_system();
    const CavityMode mode(1.0, omega_inf * omega_inf);
    const DampingModel model = damping.build();

    const auto verdict = stability_verdict(mode, model);
    if (verdict.is_unstable()) {
        json j;
        j["command"] = "free-energy";
        j["is_stable"] = false;
        j["verdict"] = "unstable";
        j["instability_strength"] = *verdict.omega0 * *verdict.omega0;
        emit_json({out.path, "json", out.units}, j, "free-energy: unstable mode");
        return exit_instability;
    }

    std::map<std::string, std::string> params;
    params["omega_inf"] = fmt(omega_inf);
    params["t_min"] = fmt(t_min);
    params["t_max"] = fmt(t_max);
    params["n"] = std::to_string(n_temps);
    params["units"] = out.units;
    std::string body = provenance("free-energy", params);
    body += "T,f_bare,f_shift,is_stable,terms_used\n";

    for (int i = 0; i < n_temps; ++i) {
        const double t_user =
            n_temps == 1 ? t_min
                         : t_min + (t_max - t_min) * i / static_cast<double>(n_temps - 1);
        const double t = units.temperature_to_internal(t_user);
        const auto r = casimir_shift(mode, model, t, rel_tol);
        body += fmt(t_user) + "," + fmt(units.energy_from_internal(r.f_bare)) + "," +
                fmt(units.energy_from_internal(r.f_shift)) + "," +
                (r.is_stable ? "1" : "0") + "," +
                std::to_string(r.matsubara_terms_used) + "\n";
    }
    emit_csv(out, body, "free-energy: " + std::to_string(n_temps) + " temperatures");
    return exit_ok;
}

int run_scatter(const OutputSpec& out, double omega0, double tol,
                const PulseFlags& pulse_flags) {
    const PulseProfile pulse = pulse_flags.build();
    const ScatteringResult s = scatter_pulse(omega0, pulse, tol);

    json j;
    j["rho_re"] = s.rho.real();
    j["rho_im"] = s.rho.imag();
    j["sigma_re"] = s.sigma.real();
    j["sigma_im"] = s.sigma.imag();
    j["R"] = s.reflection;
    j["P"] = s.transmission;
    j["Theta"] = s.phase;
    j["unitarity_defect"] = s.unitarity_defect;
    emit_json(out, j, "scatter: R=" + fmt(s.reflection));
    return exit_ok;
}

int run_chart(const OutputSpec& out, double omega0, double alpha_min,
              double alpha_max, int n_alpha, double x_min, double x_max, int n_x,
              double duty, double tol) {
    const auto cells =
        stability_chart(omega0, alpha_min, alpha_max, x_min, x_max, n_alpha, n_x,
                        duty, tol);

    std::map<std::string, std::string> params;
    params["omega0"] = fmt(omega0);
    params["alpha_min"] = fmt(alpha_min);
    params["alpha_max"] = fmt(alpha_max);
    params["n_alpha"] = std::to_string(n_alpha);
    params["x_min"] = fmt(x_min);
    params["x_max"] = fmt(x_max);
    params["n_x"] = std::to_string(n_x);
    params["duty"] = fmt(duty);
    std::string body = provenance("stability-chart", params);
    body += "alpha,omega0_tau,mu,class,rate\n";
    std::size_t unstable = 0;
    for (const auto& c : cells) {
        body += fmt(c.alpha) + "," + fmt(c.omega0_tau) + "," + fmt(c.mu) + "," +
                c.class_label() + "," + fmt(c.rate) + "\n";
        if (!c.error && c.kind == FloquetClass::Kind::unstable)
            ++unstable;
    }
    emit_csv(out, body,
             "stability-chart: " + std::to_string(cells.size()) + " cells, " +
                 std::to_string(unstable) + " unstable");
    return exit_ok;
}

int run_heat(const OutputSpec& out, double reflection, double omega0,
             double t_initial_user) {
    const auto units = out.unit_system();
    const HeatingResult h =
        heat_cavity(reflection, omega0, units.temperature_to_internal(t_initial_user));

    json j;
    j["command"] = "heat";
    j["units"] = out.units;
    j["t_star"] = units.temperature_from_internal(h.t_star);
    j["mean_pairs"] = h.mean_pairs;
    j["n_initial"] = h.n_initial;
    j["n_final"] = h.n_final;
    j["t_initial"] = t_initial_user;
    j["t_final"] = units.temperature_from_internal(h.t_final);
    j["t_final_approx"] = units.temperature_from_internal(h.t_final_approx);
    j["approx_valid"] = h.approx_valid;
    emit_json(out, j, "heat: n_final=" + fmt(h.n_final));
    return exit_ok;
}

int run_enhancement(const OutputSpec& out, double omega0, double t_star_user,
                    double ti_min_user, double ti_max_user, int n_points) {
    const auto units = out.unit_system();
    const auto curve = enhancement_curve(
        omega0, units.temperature_to_internal(t_star_user),
        units.temperature_to_internal(ti_min_user),
        units.temperature_to_internal(ti_max_user), n_points);

    std::map<std::string, std::string> params;
    params["omega0"] = fmt(omega0);
    params["t_star"] = fmt(t_star_user);
    params["units"] = out.units;
    std::string body = provenance("enhancement", params);
    body += "kTi_over_E,T_ratio_approx,T_ratio_exact\n";
    for (const auto& p : curve)
        body += fmt(p.kTi_over_E) + "," + fmt(p.ratio_approx) + "," +
                fmt(p.ratio_exact) + "\n";
    emit_csv(out, body, "enhancement: " + std::to_string(curve.size()) + " points");
    return exit_ok;
}

int run_saturate(const OutputSpec& out, double gamma, double omega0,
                 const std::string& pump_kind, double s_bar, double chi0,
                 double tau_dagger, double t_eta_user, double loss_q,
                 const std::string& trajectory_path, double t_max, int n_points) {
    const auto units = out.unit_system();
    const double t_eta = units.temperature_to_internal(t_eta_user);

    PumpNoiseModel pump = pump_kind == "debye"
                              ? PumpNoiseModel::debye(chi0, tau_dagger, t_eta)
                              : PumpNoiseModel::direct(s_bar, t_eta);

    double gain = gamma;
    if (loss_q > 0.0)
        gain = 0.5 * net_production_rate(gamma, omega0, loss_q);
    if (!(gain > 0.0))
        throw DomainError("saturate: effective gain must be positive "
                          "(loss exceeds the parametric gain)");

    const SaturationReport r = saturation_report(gain, omega0, pump);

    json j;
    j["command"] = "saturate";
    j["units"] = out.units;
    j["gamma"] = gamma;
    j["effective_gain"] = gain;
    j["gamma_tilde"] = r.gamma_tilde;
    j["unbounded"] = r.unbounded;
    if (!r.unbounded) {
        j["n_sat_rate_equation"] = r.n_sat_rate_equation;
        if (r.n_sat_response)
            j["n_sat_response"] = *r.n_sat_response;
        if (r.n_sat_relaxation)
            j["n_sat_relaxation"] = *r.n_sat_relaxation;
        j["consistency_defect"] = r.consistency_defect;
    }

    if (!trajectory_path.empty() && !r.unbounded) {
        if (!(t_max > 0.0) || n_points < 2)
            throw DomainError("saturate: trajectory needs --t-max > 0 and --nt >= 2");
        std::map<std::string, std::string> params;
        params["gamma"] = fmt(gain);
        params["gamma_tilde"] = fmt(r.gamma_tilde);
        std::string body = provenance("saturate-trajectory", params);
        body += "t,n\n";
        for (int i = 0; i < n_points; ++i) {
            const double t = t_max * i / static_cast<double>(n_points - 1);
            body += fmt(t) + "," + fmt(evolve_occupation(1.0, gain, r.gamma_tilde, t)) +
                    "\n";
        }
        write_file(trajectory_path, body);
    }

    const std::string summary =
        r.unbounded ? "saturate: unbounded growth (gamma_tilde = 0)"
                    : "saturate: n_sat=" + fmt(r.n_sat_rate_equation);
    emit_json(out, j, summary);
    return r.unbounded ? exit_instability : exit_ok;
}

int run_braggio(const OutputSpec& out, double gain_ratio, double recomb_ratio,
                double laser_ratio) {
    const double estimate = braggio_estimate(gain_ratio, recomb_ratio, laser_ratio);
    json j;
    j["command"] = "example-braggio";
    j["gain_ratio"] = gain_ratio;
    j["inv_omega_tau_r"] = recomb_ratio;
    j["laser_ratio"] = laser_ratio;
    j["n_saturate"] = estimate;
    emit_json(out, j, "example-braggio: n_saturate=" + fmt(estimate));
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"single damped cavity mode: response, free energy, Floquet "
                 "stability, photon statistics, saturation"};
    app.set_config("--config", "", "key-value configuration file");
    app.require_subcommand(1);

    OutputSpec out;
    out.format = "json";
    out.units = "natural";
    app.add_option("--output,-o", out.path, "artifact output path")->capture_default_str();
    app.add_option("--format", out.format, "artifact format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--units", out.units, "unit convention: natural or si")
        ->check(CLI::IsMember({"natural", "si"}));

    // mode ------------------------------------------------------------------
    auto* mode_cmd = app.add_subcommand("mode", "circuit constants from sampled mode functions");
    std::string mode_input;
    int demo_n = 0;
    double demo_side = 1.0;
    mode_cmd->add_option("--input", mode_input, "mode samples CSV");
    mode_cmd->add_option("--demo-sine", demo_n, "use the built-in sine mode at N^3");
    mode_cmd->add_option("--side", demo_side, "cube side for the demo mode");

    // response ---------------------------------------------------------------
    auto* resp_cmd = app.add_subcommand("response", "shifted frequency, sum rule, quality factor");
    double omega_inf = 0.0, capacitance = 1.0;
    DampingFlags resp_damping;
    resp_cmd->add_option("--omega-inf", omega_inf, "bare mode frequency")->required();
    resp_cmd->add_option("--capacitance", capacitance, "mode capacitance");
    resp_damping.add_to(resp_cmd);

    // free-energy -------------------------------------------------------------
    auto* fe_cmd = app.add_subcommand("free-energy", "bare and Casimir-shifted free energies");
    double fe_omega = 0.0, fe_tmin = 0.0, fe_tmax = 0.0, fe_tol = 1e-8;
    int fe_n = 1;
    DampingFlags fe_damping;
    fe_cmd->add_option("--omega-inf", fe_omega, "bare mode frequency")->required();
    fe_cmd->add_option("--t-min", fe_tmin, "lowest temperature")->required();
    fe_cmd->add_option("--t-max", fe_tmax, "highest temperature")->required();
    fe_cmd->add_option("--n", fe_n, "number of temperatures");
    fe_cmd->add_option("--rel-tol", fe_tol, "Matsubara truncation tolerance");
    fe_damping.add_to(fe_cmd);

    // scatter ------------------------------------------------------------------
    auto* scatter_cmd = app.add_subcommand("scatter", "pulse scattering amplitudes");
    double sc_omega0 = 1.0, sc_tol = 1e-10;
    PulseFlags pulse_flags;
    scatter_cmd->add_option("--omega0", sc_omega0, "carrier frequency");
    scatter_cmd->add_option("--tol", sc_tol, "integrator tolerance");
    pulse_flags.add_to(scatter_cmd);

    // stability-chart ------------------------------------------------------------
    auto* chart_cmd = app.add_subcommand("stability-chart", "scan of the (alpha, Omega_0 tau) plane");
    double ch_omega0 = 1.0, ch_amin = 0.0, ch_amax = 0.3, ch_xmin = 1.0,
           ch_xmax = 7.0, ch_duty = 0.5, ch_tol = 1e-10;
    int ch_na = 50, ch_nx = 50;
    chart_cmd->add_option("--omega0", ch_omega0, "carrier frequency");
    chart_cmd->add_option("--alpha-min", ch_amin, "smallest frequency step");
    chart_cmd->add_option("--alpha-max", ch_amax, "largest frequency step");
    chart_cmd->add_option("--na", ch_na, "alpha grid points");
    chart_cmd->add_option("--x-min", ch_xmin, "smallest Omega_0 tau");
    chart_cmd->add_option("--x-max", ch_xmax, "largest Omega_0 tau");
    chart_cmd->add_option("--nx", ch_nx, "Omega_0 tau grid points");
    chart_cmd->add_option("--duty", ch_duty, "stepped fraction of the period");
    chart_cmd->add_option("--tol", ch_tol, "integrator tolerance");

    // heat --------------------------------------------------------------------
    auto* heat_cmd = app.add_subcommand("heat", "cavity heating from one modulation event");
    double ht_r = 0.0, ht_omega0 = 1.0, ht_ti = 0.0;
    heat_cmd->add_option("--reflection", ht_r, "pair-creation probability R")->required();
    heat_cmd->add_option("--omega0", ht_omega0, "mode frequency");
    heat_cmd->add_option("--t-initial", ht_ti, "initial mode temperature");

    // enhancement ---------------------------------------------------------------
    auto* enh_cmd = app.add_subcommand("enhancement", "radiation-enhancement curve vs initial temperature");
    double en_omega0 = 1.0, en_tstar = 0.0, en_timin = 0.0, en_timax = 0.0;
    int en_n = 51;
    enh_cmd->add_option("--omega0", en_omega0, "mode frequency");
    enh_cmd->add_option("--t-star", en_tstar, "pair-creation noise temperature")->required();
    enh_cmd->add_option("--ti-min", en_timin, "lowest initial temperature");
    enh_cmd->add_option("--ti-max", en_timax, "highest initial temperature")->required();
    enh_cmd->add_option("--n", en_n, "number of points");

    // saturate -------------------------------------------------------------------
    auto* sat_cmd = app.add_subcommand("saturate", "pump-noise saturation of the parametric gain");
    double sa_gamma = 0.0, sa_omega0 = 1.0, sa_sbar = 0.0, sa_chi0 = 0.0,
           sa_tau = 1.0, sa_teta = 1.0, sa_q = 0.0, sa_tmax = 0.0;
    int sa_nt = 101;
    std::string sa_pump = "direct", sa_traj;
    sat_cmd->add_option("--gamma", sa_gamma, "parametric growth rate")->required();
    sat_cmd->add_option("--omega0", sa_omega0, "mode frequency");
    sat_cmd->add_option("--pump", sa_pump, "pump model: direct or debye")
        ->check(CLI::IsMember({"direct", "debye"}));
    sat_cmd->add_option("--s-bar", sa_sbar, "symmetrized density at 2 Omega_0");
    sat_cmd->add_option("--chi0", sa_chi0, "static pump response");
    sat_cmd->add_option("--tau-dagger", sa_tau, "pump relaxation time");
    sat_cmd->add_option("--t-eta", sa_teta, "pump noise temperature");
    sat_cmd->add_option("--loss-q", sa_q,
                        "reduce the gain by the cavity loss Omega_0/2Q before saturating");
    sat_cmd->add_option("--trajectory", sa_traj, "also write an occupation trajectory CSV");
    sat_cmd->add_option("--t-max", sa_tmax, "trajectory end time");
    sat_cmd->add_option("--nt", sa_nt, "trajectory points");

    // example-braggio --------------------------------------------------------------
    auto* br_cmd = app.add_subcommand("example-braggio", "dimensionless saturation estimate");
    double br_gain = 0.05, br_recomb = 10.0, br_laser = 2e5;
    br_cmd->add_option("--gain-ratio", br_gain, "gamma / Omega_0");
    br_cmd->add_option("--recombination-ratio", br_recomb, "1 / (Omega_0 tau_R)");
    br_cmd->add_option("--laser-ratio", br_laser, "omega_L / Omega_0");

    // global output/units flags may appear anywhere on the line
    for (auto* sub : app.get_subcommands(nullptr))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_validation;
    }

    try {
        if (mode_cmd->parsed()) {
            if (out.path.empty()) out.path = "mode." + out.format;
            return run_mode(out, mode_input, demo_n, demo_side);
        }
        if (resp_cmd->parsed()) {
            if (out.path.empty()) out.path = "response.json";
            return run_response(out, omega_inf, capacitance, resp_damping);
        }
        if (fe_cmd->parsed()) {
            if (out.path.empty()) out.path = "free_energy.csv";
            return run_free_energy(out, fe_omega, fe_tmin, fe_tmax, fe_n, fe_tol,
                                   fe_damping);
        }
        if (scatter_cmd->parsed()) {
            if (out.path.empty()) out.path = "scatter.json";
            return run_scatter(out, sc_omega0, sc_tol, pulse_flags);
        }
        if (chart_cmd->parsed()) {
            if (out.path.empty()) out.path = "stability_chart.csv";
            return run_chart(out, ch_omega0, ch_amin, ch_amax, ch_na, ch_xmin,
                             ch_xmax, ch_nx, ch_duty, ch_tol);
        }
        if (heat_cmd->parsed()) {
            if (out.path.empty()) out.path = "heat.json";
            return run_heat(out, ht_r, ht_omega0, ht_ti);
        }
        if (enh_cmd->parsed()) {
            if (out.path.empty()) out.path = "enhancement.csv";
            return run_enhancement(out, en_omega0, en_tstar, en_timin, en_timax, en_n);
        }
        if (sat_cmd->parsed()) {
            if (out.path.empty()) out.path = "saturate.json";
            return run_saturate(out, sa_gamma, sa_omega0, sa_pump, sa_sbar, sa_chi0,
                                sa_tau, sa_teta, sa_q, sa_traj, sa_tmax, sa_nt);
        }
        if (br_cmd->parsed()) {
            if (out.path.empty()) out.path = "braggio.json";
            return run_braggio(out, br_gain, br_recomb, br_laser);
        }
        std::cerr << "no command given\n";
        return exit_validation;
    } catch (const UnstableStaticError& e) {
        std::cerr << "instability: " << e.what() << "\n";
        return exit_instability;
    } catch (const NumericsError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    } catch (const DomainError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return exit_validation;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_validation;
    }
}
