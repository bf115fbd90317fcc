#pragma once

#include <string>

namespace collspec {

/// Unit tags accepted at the configuration boundary.
enum class Unit {
    gamma0,             ///< already dimensionless in gamma0 units
    nano_ev,            ///< energy in neV
    tesla_moment,       ///< field (T) times a per-Tesla moment factor (neV/T), i.e. neV
};

/// Express `value` in units of gamma0.  Exact multiplication/division.
/// Throws ConfigError for gamma0_nev <= 0.
double convert_units(double value, Unit unit, double gamma0_nev);

/// Parse a unit tag ("gamma0", "neV", "T*neV/T").  Throws ConfigError on
/// unknown tags.
Unit parse_unit(const std::string& tag);

}  // namespace collspec
