// Command-line front end: scenario execution, deterministic CSV/JSON
// emission, and static SVG rendering of |chi/chi0|^2 curves.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "collspec/analysis.hpp"
#include "collspec/config.hpp"
#include "collspec/distributions.hpp"
#include "collspec/dynamics.hpp"
#include "collspec/output.hpp"
#include "collspec/presets.hpp"
#include "collspec/response.hpp"

namespace {

using namespace collspec;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

struct CommonOpts {
    std::string preset;
    std::string config_path;
    std::string out_dir;
    std::string grid_override;
    int threads = 1;
    bool svg = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string sanitize(const std::string& label) {
    std::string out;
    for (char c : label) out += (c == '=' ? '-' : (c == ' ' ? '_' : c));
    return out;
}

FrequencyGrid parse_grid_override(const std::string& text) {
    FrequencyGrid g;
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw ConfigError("--grid expects MIN:MAX:STEPS");
    try {
        g.min = std::stod(text.substr(0, c1));
        g.max = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
        g.steps = std::stoi(text.substr(c2 + 1));
    } catch (const std::exception&) {
        throw ConfigError("--grid expects numeric MIN:MAX:STEPS");
    }
    g.validate();
    return g;
}

// Resolve --preset/--config into a list of labeled scenarios.
std::vector<PresetMember> resolve_scenarios(const CommonOpts& opts) {
    if (opts.preset.empty() == opts.config_path.empty())
        throw ConfigError("give exactly one of --preset or --config");
    std::vector<PresetMember> members;
    if (!opts.preset.empty()) {
        members = paper_preset(opts.preset).members;
    } else {
        members.push_back({"scenario", parse_config(read_file(opts.config_path))});
    }
    if (!opts.grid_override.empty()) {
        const FrequencyGrid g = parse_grid_override(opts.grid_override);
        for (auto& m : members) m.config.grid = g;
    }
    return members;
}

void ensure_out_dir(const std::string& dir) {
    if (dir.empty()) throw ConfigError("--out DIR is required for this command");
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw ConfigError("cannot create output directory '" + dir + "'");
}

ordered_json metrics_json(const PeakMetrics& m) {
    ordered_json j;
    j["argmax"] = m.argmax;
    j["peak_value"] = m.peak_value;
    if (m.fwhm) j["fwhm"] = *m.fwhm; else j["fwhm"] = nullptr;
    if (m.asymmetry) j["asymmetry"] = *m.asymmetry; else j["asymmetry"] = nullptr;
    j["minima"] = ordered_json::array();
    for (const auto& [loc, val] : m.minima)
        j["minima"].push_back({{"omega", loc}, {"value", val}});
    return j;
}

ordered_json envelope_header(const std::string& command) {
    ordered_json env;
    env["tool"] = kToolName;
    env["version"] = kToolVersion;
    env["command"] = command;
    return env;
}

void finish_envelope(ordered_json& env, const std::string& out_dir,
                     std::chrono::steady_clock::time_point t0) {
    const auto dt = std::chrono::steady_clock::now() - t0;
    env["wall_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
    write_file(out_dir + "/result.json", env.dump(2) + "\n");
}

int cmd_spectrum(const CommonOpts& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    auto members = resolve_scenarios(opts);
    ensure_out_dir(opts.out_dir);

    ordered_json env = envelope_header("spectrum");
    env["scenarios"] = ordered_json::array();

    std::vector<Spectrum> spectra;
    spectra.reserve(members.size());
    for (const auto& m : members) spectra.push_back(sweep(m.config, opts.threads));

    std::vector<SvgCurve> curves;
    for (std::size_t i = 0; i < members.size(); ++i) {
        const std::string csv_name =
            members.size() == 1 ? "spectrum.csv" : "spectrum_" + sanitize(members[i].label) + ".csv";
        write_file(opts.out_dir + "/" + csv_name, spectrum_csv(spectra[i]));

        ordered_json sj;
        sj["label"] = members[i].label;
        sj["config"] = ordered_json::parse(serialize_config(members[i].config));
        sj["csv"] = csv_name;
        if (spectra[i].scalar) sj["metrics"] = metrics_json(peak_metrics(spectra[i]));
        env["scenarios"].push_back(sj);
        curves.push_back({members[i].label, &spectra[i]});
    }

    const bool want_svg = opts.svg ||
        (!members.empty() &&
         std::find(members[0].config.outputs.begin(), members[0].config.outputs.end(),
                   "svg") != members[0].config.outputs.end());
    if (want_svg) {
        const std::string title = opts.preset.empty() ? "collective spectrum" : opts.preset;
        write_file(opts.out_dir + "/spectrum.svg", spectrum_svg(curves, title));
        env["svg"] = "spectrum.svg";
    }
    finish_envelope(env, opts.out_dir, t0);
    return kExitOk;
}

int cmd_poles_modes(bool modes, double j, double gamma_big, double phi, double gamma0,
                    const std::string& out_dir) {
    ordered_json env = envelope_header(modes ? "modes" : "poles");
    env["J"] = j;
    env["Gamma"] = gamma_big;
    env["phi"] = phi;
    env["gamma0"] = gamma0;
    if (modes) {
        const ModePair mp = doublet_modes(j, gamma_big, phi, gamma0);
        env["lambda_plus"] = {mp.lambda_plus.real(), mp.lambda_plus.imag()};
        env["lambda_minus"] = {mp.lambda_minus.real(), mp.lambda_minus.imag()};
        env["e_plus"] = {{mp.e_plus.x.real(), mp.e_plus.x.imag()},
                         {mp.e_plus.y.real(), mp.e_plus.y.imag()}};
        env["e_minus"] = {{mp.e_minus.x.real(), mp.e_minus.x.imag()},
                          {mp.e_minus.y.real(), mp.e_minus.y.imag()}};
    } else {
        const PolePair pp = doublet_poles(j, gamma_big, phi, gamma0);
        env["omega_plus"] = {pp.omega_plus.real(), pp.omega_plus.imag()};
        env["omega_minus"] = {pp.omega_minus.real(), pp.omega_minus.imag()};
        const double res = std::max(std::abs(doublet_denominator(pp.omega_plus, j, gamma_big, phi, gamma0)),
                                    std::abs(doublet_denominator(pp.omega_minus, j, gamma_big, phi, gamma0)));
        env["max_denominator_residual"] = res;
    }
    const std::string text = env.dump(2) + "\n";
    if (!out_dir.empty()) {
        ensure_out_dir(out_dir);
        write_file(out_dir + "/result.json", text);
    }
    std::cout << text;
    return kExitOk;
}

int cmd_timedomain(const CommonOpts& opts, const std::string& member_label, double t_max,
                   double dt, bool with_spectrum) {
    const auto t0 = std::chrono::steady_clock::now();
    auto members = resolve_scenarios(opts);
    ensure_out_dir(opts.out_dir);

    const PresetMember* chosen = &members.front();
    if (!member_label.empty()) {
        chosen = nullptr;
        for (const auto& m : members)
            if (m.label == member_label) chosen = &m;
        if (!chosen) throw ConfigError("no scenario member labeled '" + member_label + "'");
    }
    const ScenarioConfig& cfg = chosen->config;

    // Time stepping needs discrete modes; distributions discretize at their
    // configured quadrature order.
    const EnsembleSpec ensemble =
        cfg.has_ensemble() ? cfg.ensemble() : discretize_distribution(cfg.distribution());

    const double dt_used = dt > 0.0 ? dt : suggest_dt(ensemble, cfg.coupling);
    DriveEnvelope kick;  // unit-area impulse along x at t = 0
    const int stride = std::max(1, static_cast<int>(std::floor(0.01 / dt_used)));
    const ModeTrajectory traj =
        integrate_eom(ensemble, cfg.coupling, kick, t_max, dt_used, stride);
    write_file(opts.out_dir + "/trajectory.csv", trajectory_csv(traj));

    ordered_json env = envelope_header("timedomain");
    env["label"] = chosen->label;
    env["config"] = ordered_json::parse(serialize_config(cfg));
    env["t_max"] = t_max;
    env["dt"] = dt_used;
    env["record_stride"] = stride;
    env["trajectory"] = "trajectory.csv";

    if (with_spectrum) {
        const ImpulseSpectrumResult res =
            impulse_response_spectrum(ensemble, cfg.coupling, cfg.grid, t_max, dt_used);
        write_file(opts.out_dir + "/impulse_spectrum.csv", spectrum_csv(res.spectrum));
        env["impulse_spectrum"] = "impulse_spectrum.csv";
        env["tail_fraction"] = res.tail_fraction;
        if (res.tail_fraction > 1e-6)
            std::cerr << "warning: trajectory tail not fully decayed (tail fraction "
                      << res.tail_fraction << "); increase --tmax\n";
    }
    finish_envelope(env, opts.out_dir, t0);
    return kExitOk;
}

int cmd_preset_dump(const std::string& name, const std::string& out_dir) {
    const Preset preset = paper_preset(name);
    ordered_json env = envelope_header("preset");
    env["name"] = preset.name;
    env["title"] = preset.title;
    env["members"] = ordered_json::array();
    for (const auto& m : preset.members) {
        ordered_json mj;
        mj["label"] = m.label;
        mj["config"] = ordered_json::parse(serialize_config(m.config));
        env["members"].push_back(mj);
    }
    const std::string text = env.dump(2) + "\n";
    if (!out_dir.empty()) {
        ensure_out_dir(out_dir);
        write_file(out_dir + "/preset.json", text);
    }
    std::cout << text;
    return kExitOk;
}

int cmd_oracle_check(const CommonOpts& opts, double tolerance) {
    auto members = resolve_scenarios(opts);
    bool any_checked = false;
    double worst = 0.0;
    for (const auto& m : members) {
        if (m.config.has_ensemble())
            throw ConfigError("oracle-check applies to continuous distribution models only");
        const DistributionSpec& d = m.config.distribution();
        if (d.kind == DistributionSpec::Kind::discrete_list)
            throw ConfigError("oracle-check applies to continuous distribution models only");
        if (!(d.sigma > 0.0)) {
            std::cout << m.label << ": skipped (sigma = 0 is the exact closed form)\n";
            continue;
        }
        double member_worst = 0.0;
        for (int i = 0; i < m.config.grid.steps; ++i) {
            const double w = m.config.grid.omega(i);
            const Complex closed = (d.kind == DistributionSpec::Kind::gaussian_isomer)
                                       ? gaussian_isomer_response(d.mean, d.sigma, w)
                                       : gaussian_magnetic_response(d.mean, d.sigma, w);
            const Complex oracle = quadrature_response_oracle(d, w);
            member_worst = std::max(member_worst, std::abs(closed - oracle) / std::abs(oracle));
        }
        any_checked = true;
        worst = std::max(worst, member_worst);
        std::cout << m.label << ": max relative error " << member_worst << "\n";
    }
    if (!any_checked) throw ConfigError("oracle-check: no continuous member with sigma > 0");
    const bool pass = worst <= tolerance;
    std::cout << (pass ? "PASS" : "FAIL") << " (max " << worst << ", tolerance " << tolerance
              << ")\n";
    return pass ? kExitOk : kExitNumeric;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"collective susceptibility of inhomogeneous emitter ensembles in 1D waveguides"};
    app.require_subcommand(1);

    CommonOpts opts;
    double j = 0.0, gamma_big = 0.0, phi = 0.0, gamma0 = 1.0;
    double t_max = 50.0, dt = 0.0, tolerance = 1e-8;
    bool with_spectrum = false;
    std::string member_label, preset_name;

    auto add_common = [&](CLI::App* cmd, bool with_grid = true) {
        cmd->add_option("--preset", opts.preset, "named scenario preset");
        cmd->add_option("--config", opts.config_path, "path to a JSON scenario document");
        cmd->add_option("--out", opts.out_dir, "output directory");
        cmd->add_option("--threads", opts.threads, "worker count (0 = hardware concurrency)");
        if (with_grid) cmd->add_option("--grid", opts.grid_override, "override grid MIN:MAX:STEPS");
    };

    CLI::App* spectrum = app.add_subcommand("spectrum", "frequency-domain sweep");
    add_common(spectrum);
    spectrum->add_flag("--svg", opts.svg, "also render spectrum.svg");

    CLI::App* poles = app.add_subcommand("poles", "uniform-doublet pole positions");
    CLI::App* modes = app.add_subcommand("modes", "uniform-doublet eigenmodes");
    for (CLI::App* cmd : {poles, modes}) {
        cmd->add_option("--J", j, "coherent coupling, gamma0 units")->required();
        cmd->add_option("--Gamma", gamma_big, "incoherent coupling, gamma0 units")->required();
        cmd->add_option("--phi", phi, "doublet splitting, gamma0 units")->required();
        cmd->add_option("--gamma0", gamma0, "reference linewidth (default 1)");
        cmd->add_option("--out", opts.out_dir, "optional output directory");
    }

    CLI::App* timedomain = app.add_subcommand("timedomain", "impulse-driven time evolution");
    add_common(timedomain);
    timedomain->add_option("--member", member_label, "preset member label (default: first)");
    timedomain->add_option("--tmax", t_max, "integration horizon, 1/gamma0 units");
    timedomain->add_option("--dt", dt, "step (default: stability bound)");
    timedomain->add_flag("--spectrum", with_spectrum, "also emit the impulse-response spectrum");

    CLI::App* preset_cmd = app.add_subcommand("preset", "dump a preset's resolved configs");
    preset_cmd->add_option("name", preset_name, "preset name")->required();
    preset_cmd->add_option("--out", opts.out_dir, "optional output directory");

    CLI::App* oracle = app.add_subcommand("oracle-check", "closed forms vs adaptive quadrature");
    add_common(oracle);
    oracle->add_option("--tol", tolerance, "pass tolerance (default 1e-8)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (spectrum->parsed()) return cmd_spectrum(opts);
        if (poles->parsed()) return cmd_poles_modes(false, j, gamma_big, phi, gamma0, opts.out_dir);
        if (modes->parsed()) return cmd_poles_modes(true, j, gamma_big, phi, gamma0, opts.out_dir);
        if (timedomain->parsed())
            return cmd_timedomain(opts, member_label, t_max, dt, with_spectrum);
        if (preset_cmd->parsed()) return cmd_preset_dump(preset_name, opts.out_dir);
        if (oracle->parsed()) return cmd_oracle_check(opts, tolerance);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const NumericError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitConfig;
}
