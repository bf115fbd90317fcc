#include "collspec/config.hpp"

#include <json.hpp>

#include <cmath>
#include <set>

#include "collspec/presets.hpp"

namespace collspec {

using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ConfigError(path + ": " + what);
}

const ordered_json& expect(const ordered_json& j, const std::string& path, const char* key) {
    if (!j.contains(key)) fail(path, std::string("missing required field '") + key + "'");
    return j.at(key);
}

double get_number(const ordered_json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) fail(path, "value must be finite");
    return v;
}

int get_int(const ordered_json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<int>();
}

void reject_unknown(const ordered_json& j, const std::string& path,
                    const std::set<std::string>& allowed) {
    for (const auto& item : j.items())
        if (!allowed.count(item.key())) fail(path, "unknown field '" + item.key() + "'");
}

Complex get_complex(const ordered_json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2) fail(path, "expected a [re, im] pair");
    return {get_number(j[0], path + "[0]"), get_number(j[1], path + "[1]")};
}

Vec2c get_dipole(const ordered_json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2) fail(path, "expected [[re,im],[re,im]]");
    return {get_complex(j[0], path + "[0]"), get_complex(j[1], path + "[1]")};
}

Transition parse_transition(const ordered_json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    reject_unknown(j, path, {"detuning", "gamma", "gamma_channels", "dipole"});
    Transition tr;
    tr.detuning = get_number(expect(j, path, "detuning"), path + ".detuning");
    if (j.contains("gamma") && j.contains("gamma_channels"))
        fail(path, "give either 'gamma' or 'gamma_channels', not both");
    if (j.contains("gamma_channels")) {
        // Multiple decay channels collapse to their sum; only the total rate
        // enters the linear dynamics.
        const auto& ch = j.at("gamma_channels");
        if (!ch.is_array() || ch.empty()) fail(path + ".gamma_channels", "expected a non-empty array");
        double sum = 0.0;
        for (std::size_t i = 0; i < ch.size(); ++i)
            sum += get_number(ch[i], path + ".gamma_channels[" + std::to_string(i) + "]");
        tr.linewidth = sum;
    } else if (j.contains("gamma")) {
        tr.linewidth = get_number(j.at("gamma"), path + ".gamma");
    } else {
        tr.linewidth = 1.0;
    }
    tr.dipole = j.contains("dipole") ? get_dipole(j.at("dipole"), path + ".dipole")
                                     : Vec2c{Complex{1.0, 0.0}, Complex{0.0, 0.0}};
    return tr;
}

EnsembleSpec parse_ensemble(const ordered_json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) fail(path, "expected a non-empty array of sub-ensembles");
    EnsembleSpec ens;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string p = path + "[" + std::to_string(i) + "]";
        const auto& sj = j[i];
        if (!sj.is_object()) fail(p, "expected an object");
        reject_unknown(sj, p, {"weight", "transitions"});
        SubEnsemble sub;
        sub.weight = sj.contains("weight") ? get_number(sj.at("weight"), p + ".weight") : 1.0;
        const auto& tj = expect(sj, p, "transitions");
        if (!tj.is_array() || tj.empty()) fail(p + ".transitions", "expected a non-empty array");
        for (std::size_t k = 0; k < tj.size(); ++k)
            sub.transitions.push_back(
                parse_transition(tj[k], p + ".transitions[" + std::to_string(k) + "]"));
        ens.sub_ensembles.push_back(std::move(sub));
    }
    return ens;
}

DistributionSpec parse_distribution(const ordered_json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    reject_unknown(j, path, {"type", "mean", "sigma", "points", "values", "weights"});
    DistributionSpec d;
    const auto& tj = expect(j, path, "type");
    if (!tj.is_string()) fail(path + ".type", "expected a string");
    const std::string type = tj.get<std::string>();
    if (type == "gaussian_isomer") d.kind = DistributionSpec::Kind::gaussian_isomer;
    else if (type == "gaussian_magnetic") d.kind = DistributionSpec::Kind::gaussian_magnetic;
    else if (type == "discrete_list") d.kind = DistributionSpec::Kind::discrete_list;
    else fail(path + ".type", "unknown distribution type '" + type + "'");

    if (d.kind == DistributionSpec::Kind::discrete_list) {
        const auto& vv = expect(j, path, "values");
        const auto& ww = expect(j, path, "weights");
        if (!vv.is_array() || !ww.is_array()) fail(path, "values/weights must be arrays");
        for (std::size_t i = 0; i < vv.size(); ++i)
            d.values.push_back(get_number(vv[i], path + ".values[" + std::to_string(i) + "]"));
        for (std::size_t i = 0; i < ww.size(); ++i)
            d.weights.push_back(get_number(ww[i], path + ".weights[" + std::to_string(i) + "]"));
    } else {
        d.mean = get_number(expect(j, path, "mean"), path + ".mean");
        d.sigma = get_number(expect(j, path, "sigma"), path + ".sigma");
        if (j.contains("points")) d.points = get_int(j.at("points"), path + ".points");
    }
    return d;
}

}  // namespace

void ScenarioConfig::validate() const {
    if (!(gamma0_nev > 0.0) || !std::isfinite(gamma0_nev))
        throw ConfigError("gamma0_neV must be finite and > 0");
    if (cavity) cavity->validate();
    coupling.validate();
    if (has_ensemble()) ensemble().validate();
    else distribution().validate();
    grid.validate();
    for (const auto& o : outputs)
        if (o != "csv" && o != "json" && o != "svg")
            throw ConfigError("outputs: unknown request '" + o + "'");
}

ScenarioConfig parse_config(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("syntax error: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("top level: expected an object");
    reject_unknown(j, "top level", {"gamma0_neV", "coupling", "model", "grid", "outputs"});

    ScenarioConfig cfg;
    if (j.contains("gamma0_neV")) cfg.gamma0_nev = get_number(j.at("gamma0_neV"), "gamma0_neV");

    const auto& cj = expect(j, "top level", "coupling");
    if (!cj.is_object()) fail("coupling", "expected an object");
    if (cj.contains("cavity")) {
        reject_unknown(cj, "coupling", {"cavity"});
        const auto& cav = cj.at("cavity");
        if (!cav.is_object()) fail("coupling.cavity", "expected an object");
        reject_unknown(cav, "coupling.cavity", {"delta_c", "kappa", "amplitude"});
        CavityParams p;
        p.delta_c = get_number(expect(cav, "coupling.cavity", "delta_c"), "coupling.cavity.delta_c");
        p.kappa = get_number(expect(cav, "coupling.cavity", "kappa"), "coupling.cavity.kappa");
        p.amplitude =
            get_number(expect(cav, "coupling.cavity", "amplitude"), "coupling.cavity.amplitude");
        p.validate();
        cfg.cavity = p;
        cfg.coupling = cavity_coupling(p);
    } else {
        reject_unknown(cj, "coupling", {"J", "Gamma"});
        cfg.coupling.lamb_shift = get_number(expect(cj, "coupling", "J"), "coupling.J");
        cfg.coupling.broadening = get_number(expect(cj, "coupling", "Gamma"), "coupling.Gamma");
    }

    const auto& mj = expect(j, "top level", "model");
    if (!mj.is_object()) fail("model", "expected an object");
    const bool has_ens = mj.contains("ensemble");
    const bool has_dist = mj.contains("distribution");
    if (has_ens == has_dist)
        fail("model", "exactly one of 'ensemble' or 'distribution' must be present");
    reject_unknown(mj, "model", {"ensemble", "distribution"});
    if (has_ens) cfg.model = parse_ensemble(mj.at("ensemble"), "model.ensemble");
    else cfg.model = parse_distribution(mj.at("distribution"), "model.distribution");

    const auto& gj = expect(j, "top level", "grid");
    if (!gj.is_object()) fail("grid", "expected an object");
    reject_unknown(gj, "grid", {"min", "max", "steps"});
    cfg.grid.min = get_number(expect(gj, "grid", "min"), "grid.min");
    cfg.grid.max = get_number(expect(gj, "grid", "max"), "grid.max");
    cfg.grid.steps = get_int(expect(gj, "grid", "steps"), "grid.steps");

    if (j.contains("outputs")) {
        const auto& oj = j.at("outputs");
        if (!oj.is_array()) fail("outputs", "expected an array");
        cfg.outputs.clear();
        for (std::size_t i = 0; i < oj.size(); ++i) {
            if (!oj[i].is_string()) fail("outputs[" + std::to_string(i) + "]", "expected a string");
            cfg.outputs.push_back(oj[i].get<std::string>());
        }
    }

    cfg.validate();
    return cfg;
}

namespace {

ordered_json complex_json(const Complex& z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json ensemble_json(const EnsembleSpec& ens) {
    ordered_json arr = ordered_json::array();
    for (const auto& sub : ens.sub_ensembles) {
        ordered_json sj;
        sj["weight"] = sub.weight;
        sj["transitions"] = ordered_json::array();
        for (const auto& tr : sub.transitions) {
            ordered_json tj;
            tj["detuning"] = tr.detuning;
            tj["gamma"] = tr.linewidth;
            tj["dipole"] = ordered_json::array({complex_json(tr.dipole.x), complex_json(tr.dipole.y)});
            sj["transitions"].push_back(tj);
        }
        arr.push_back(sj);
    }
    return arr;
}

ordered_json distribution_json(const DistributionSpec& d) {
    ordered_json dj;
    switch (d.kind) {
        case DistributionSpec::Kind::gaussian_isomer: dj["type"] = "gaussian_isomer"; break;
        case DistributionSpec::Kind::gaussian_magnetic: dj["type"] = "gaussian_magnetic"; break;
        case DistributionSpec::Kind::discrete_list: dj["type"] = "discrete_list"; break;
    }
    if (d.kind == DistributionSpec::Kind::discrete_list) {
        dj["values"] = d.values;
        dj["weights"] = d.weights;
    } else {
        dj["mean"] = d.mean;
        dj["sigma"] = d.sigma;
        dj["points"] = d.points;
    }
    return dj;
}

}  // namespace

std::string serialize_config(const ScenarioConfig& config, int indent) {
    ordered_json j;
    j["gamma0_neV"] = config.gamma0_nev;
    if (config.cavity) {
        j["coupling"]["cavity"]["delta_c"] = config.cavity->delta_c;
        j["coupling"]["cavity"]["kappa"] = config.cavity->kappa;
        j["coupling"]["cavity"]["amplitude"] = config.cavity->amplitude;
    } else {
        j["coupling"]["J"] = config.coupling.lamb_shift;
        j["coupling"]["Gamma"] = config.coupling.broadening;
    }
    if (config.has_ensemble()) j["model"]["ensemble"] = ensemble_json(config.ensemble());
    else j["model"]["distribution"] = distribution_json(config.distribution());
    j["grid"]["min"] = config.grid.min;
    j["grid"]["max"] = config.grid.max;
    j["grid"]["steps"] = config.grid.steps;
    j["outputs"] = config.outputs;
    return j.dump(indent);
}

}  // namespace collspec
