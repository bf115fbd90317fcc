#include "collspec/presets.hpp"

#include <cmath>
#include <cstdio>

#include "collspec/units.hpp"

namespace collspec {

namespace {

const Vec2c kAxisX{Complex{1.0, 0.0}, Complex{0.0, 0.0}};

std::string format_label(const char* key, double value) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%s=%g", key, value);
    return buf;
}

ScenarioConfig base_config(double j, double gamma_big, FrequencyGrid grid) {
    ScenarioConfig cfg;
    cfg.coupling = {j, gamma_big};
    cfg.grid = grid;
    return cfg;
}

DistributionSpec isomer_dist(double mean, double sigma, int points = 64) {
    DistributionSpec d;
    d.kind = DistributionSpec::Kind::gaussian_isomer;
    d.mean = mean;
    d.sigma = sigma;
    d.points = points;
    return d;
}

DistributionSpec magnetic_dist(double mean, double sigma, int points = 64) {
    DistributionSpec d;
    d.kind = DistributionSpec::Kind::gaussian_magnetic;
    d.mean = mean;
    d.sigma = sigma;
    d.points = points;
    return d;
}

EnsembleSpec single_line() {
    EnsembleSpec ens;
    ens.sub_ensembles.push_back({1.0, {Transition{0.0, 1.0, kAxisX}}});
    return ens;
}

ScenarioConfig cavity_point(double j, double gamma_big, FrequencyGrid grid) {
    // The cavity working points of the paper's survey are single-line
    // simulations; model them as one uniform resonance at zero detuning.
    ScenarioConfig cfg = base_config(j, gamma_big, grid);
    cfg.model = single_line();
    return cfg;
}

}  // namespace

void HyperfineScheme::validate() const {
    if (!(ground_split_nev_per_t > 0.0) || !(excited_split_nev_per_t > 0.0))
        throw ConfigError("hyperfine scheme: per-Tesla constants must be > 0");
    if (!std::isfinite(b_hf_tesla) || !std::isfinite(isomer_shift_nev))
        throw ConfigError("hyperfine scheme: non-finite field or shift");
    if (selection == Selection::all_six && !dipole_override.empty() && dipole_override.size() != 6)
        throw ConfigError("hyperfine scheme: all_six dipole override needs exactly 6 entries");
    if (selection == Selection::dm0_only && !dipole_override.empty() && dipole_override.size() != 2)
        throw ConfigError("hyperfine scheme: dm0_only dipole override needs exactly 2 entries");
}

EnsembleSpec build_fe57_scheme(const HyperfineScheme& scheme, double gamma0_nev) {
    scheme.validate();

    struct Line {
        double me;
        double mg;
    };
    std::vector<Line> lines;
    if (scheme.selection == HyperfineScheme::Selection::dm0_only) {
        lines = {{0.5, 0.5}, {-0.5, -0.5}};
    } else {
        lines = {{1.5, 0.5}, {0.5, 0.5}, {-0.5, 0.5}, {0.5, -0.5}, {-0.5, -0.5}, {-1.5, -0.5}};
    }

    SubEnsemble sub;
    sub.weight = 1.0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const double shift_nev = lines[i].me * scheme.excited_split_nev_per_t * scheme.b_hf_tesla -
                                 lines[i].mg * scheme.ground_split_nev_per_t * scheme.b_hf_tesla +
                                 scheme.isomer_shift_nev;
        Transition tr;
        tr.detuning = convert_units(shift_nev, Unit::nano_ev, gamma0_nev);
        tr.linewidth = 1.0;
        tr.dipole = scheme.dipole_override.empty() ? kAxisX : scheme.dipole_override[i];
        sub.transitions.push_back(tr);
    }

    EnsembleSpec ens;
    ens.sub_ensembles.push_back(std::move(sub));
    ens.validate();
    return ens;
}

CollectiveCoupling cavity_coupling(const CavityParams& params) {
    params.validate();
    const double denom = params.delta_c * params.delta_c + params.kappa * params.kappa;
    return {params.amplitude * params.delta_c / denom, params.amplitude * params.kappa / denom};
}

Preset paper_preset(const std::string& name) {
    Preset preset;
    preset.name = name;

    if (name == "fig5") {
        // Single Gaussian-broadened line, fixed J, width swept.  The caption
        // fixes J = 5; Gamma and the sigma members span the survey ranges.
        preset.title = "Gaussian line, J=5: width sweep";
        const FrequencyGrid grid{-45.0, 25.0, 1401};
        for (double sigma : {1.0, 5.0, 10.0}) {
            ScenarioConfig cfg = base_config(5.0, 3.0, grid);
            cfg.model = isomer_dist(0.0, sigma);
            preset.members.push_back({format_label("sigma", sigma), cfg});
        }
    } else if (name == "fig6") {
        preset.title = "Gaussian line, sigma=10: coupling sweep";
        const FrequencyGrid grid{-45.0, 25.0, 1401};
        for (double j : {0.0, 5.0, 10.0}) {
            ScenarioConfig cfg = base_config(j, 5.0, grid);
            cfg.model = isomer_dist(0.0, 10.0);
            preset.members.push_back({format_label("J", j), cfg});
        }
    } else if (name == "fig7") {
        preset.title = "Magnetic doublet, Gamma=5, J=0: width sweep";
        const FrequencyGrid grid{-50.0, 50.0, 2001};
        for (double sigma : {0.0, 3.5, 7.0, 14.0}) {
            ScenarioConfig cfg = base_config(0.0, 5.0, grid);
            cfg.model = magnetic_dist(17.0, sigma);
            preset.members.push_back({format_label("sigma", sigma), cfg});
        }
    } else if (name == "fig8" || name == "fig9") {
        const double sigma = (name == "fig8") ? 3.5 : 14.0;
        preset.title = format_label("Magnetic doublet, Gamma=5, sigma", sigma) + ": coupling sweep";
        const FrequencyGrid grid{-50.0, 50.0, 2001};
        for (double j : {0.0, 2.0, 5.0, 10.0}) {
            ScenarioConfig cfg = base_config(j, 5.0, grid);
            cfg.model = magnetic_dist(17.0, sigma);
            preset.members.push_back({format_label("J", j), cfg});
        }
    } else if (name == "cavity_2p32mrad") {
        preset.title = "Cavity working point, 2.32 mrad incidence";
        preset.members.push_back({"J=8.5", cavity_point(8.5, 3.36, {-40.0, 20.0, 1201})});
    } else if (name == "cavity_min1") {
        preset.title = "Cavity working point, first reflection minimum";
        preset.members.push_back({"J=5.5", cavity_point(5.5, 18.6, {-60.0, 40.0, 2001})});
    } else if (name == "cavity_min3") {
        preset.title = "Cavity working point, third reflection minimum";
        preset.members.push_back({"J=1.79", cavity_point(1.79, 3.37, {-30.0, 20.0, 1001})});
    } else {
        throw ConfigError("unknown preset '" + name + "'");
    }

    for (auto& m : preset.members) m.config.validate();
    return preset;
}

std::vector<std::string> preset_names() {
    return {"fig5", "fig6", "fig7", "fig8", "fig9",
            "cavity_2p32mrad", "cavity_min1", "cavity_min3"};
}

}  // namespace collspec
