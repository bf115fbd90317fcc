#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "collspec/distributions.hpp"
#include "collspec/types.hpp"

namespace collspec {

/// Complete, serializable description of one computation.  All quantities are
/// dimensionless in gamma0 units once parsed; gamma0_nev records the physical
/// reference scale for the unit boundary.
struct ScenarioConfig {
    double gamma0_nev = 4.6;
    std::optional<CavityParams> cavity;  ///< set when coupling came from cavity parameters
    CollectiveCoupling coupling;         ///< resolved (J, Gamma), always valid
    std::variant<EnsembleSpec, DistributionSpec> model;
    FrequencyGrid grid;
    std::vector<std::string> outputs{"csv", "json"};  ///< subset of {csv, json, svg}

    bool has_ensemble() const { return std::holds_alternative<EnsembleSpec>(model); }
    const EnsembleSpec& ensemble() const { return std::get<EnsembleSpec>(model); }
    const DistributionSpec& distribution() const { return std::get<DistributionSpec>(model); }

    void validate() const;
    bool operator==(const ScenarioConfig&) const = default;
};

/// Parse a JSON scenario document.  Reports syntax errors with byte
/// positions, schema violations with field paths, and invariant violations.
/// Throws ConfigError.
ScenarioConfig parse_config(const std::string& text);

/// Serialize back to the JSON schema; parse(serialize(c)) == c.
std::string serialize_config(const ScenarioConfig& config, int indent = 2);

}  // namespace collspec
