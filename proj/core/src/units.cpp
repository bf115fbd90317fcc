#include "collspec/units.hpp"

#include <cmath>

#include "collspec/types.hpp"

namespace collspec {

double convert_units(double value, Unit unit, double gamma0_nev) {
    if (!(gamma0_nev > 0.0) || !std::isfinite(gamma0_nev))
        throw ConfigError("convert_units: gamma0_neV must be finite and > 0");
    switch (unit) {
        case Unit::gamma0:
            return value;
        case Unit::nano_ev:
        case Unit::tesla_moment:
            // A field in Tesla times a neV/T moment factor is already an
            // energy in neV; both tags divide by the reference width.
            return value / gamma0_nev;
    }
    throw ConfigError("convert_units: unknown unit tag");
}

Unit parse_unit(const std::string& tag) {
    if (tag == "gamma0") return Unit::gamma0;
    if (tag == "neV") return Unit::nano_ev;
    if (tag == "T*neV/T") return Unit::tesla_moment;
    throw ConfigError("unknown unit tag '" + tag + "'");
}

}  // namespace collspec
