#include "collspec/types.hpp"

#include <cmath>

namespace collspec {

Mat2c inverse(const Mat2c& m, double rel_tol) {
    const Complex d = m.det();
    const double scale = std::max({1.0, std::norm(m.m00), std::norm(m.m01),
                                   std::norm(m.m10), std::norm(m.m11)});
    if (std::abs(d) <= rel_tol * scale)
        throw NumericError("singular 2x2 matrix (|det| below tolerance)");
    const Complex inv_d = 1.0 / d;
    return {m.m11 * inv_d, -m.m01 * inv_d, -m.m10 * inv_d, m.m00 * inv_d};
}

void Transition::validate(const std::string& where) const {
    if (!std::isfinite(detuning)) throw ConfigError(where + ": non-finite detuning");
    if (!(linewidth > 0.0) || !std::isfinite(linewidth))
        throw ConfigError(where + ": linewidth must be finite and > 0");
    if (!is_finite(dipole)) throw ConfigError(where + ": non-finite dipole");
    if (norm2(dipole) == 0.0) throw ConfigError(where + ": dipole must have a nonzero component");
}

void SubEnsemble::validate(const std::string& where) const {
    if (!(weight > 0.0) || weight > 1.0 || !std::isfinite(weight))
        throw ConfigError(where + ": weight must be in (0, 1]");
    if (transitions.empty()) throw ConfigError(where + ": transitions must be non-empty");
    for (std::size_t i = 0; i < transitions.size(); ++i)
        transitions[i].validate(where + ".transitions[" + std::to_string(i) + "]");
}

void EnsembleSpec::validate() const {
    if (sub_ensembles.empty()) throw ConfigError("ensemble: no sub-ensembles");
    double sum = 0.0;
    for (std::size_t i = 0; i < sub_ensembles.size(); ++i) {
        sub_ensembles[i].validate("ensemble[" + std::to_string(i) + "]");
        sum += sub_ensembles[i].weight;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.6g", sum);
        throw ConfigError(std::string("ensemble: weights sum to ") + buf);
    }
}

double EnsembleSpec::total_dipole_weight() const {
    double total = 0.0;
    for (const auto& sub : sub_ensembles)
        for (const auto& tr : sub.transitions) total += sub.weight * norm2(tr.dipole);
    return total;
}

void CollectiveCoupling::validate() const {
    if (!std::isfinite(lamb_shift)) throw ConfigError("coupling: non-finite J");
    if (!(broadening >= 0.0) || !std::isfinite(broadening))
        throw ConfigError("coupling: Gamma must be finite and >= 0");
}

void CavityParams::validate() const {
    if (!std::isfinite(delta_c)) throw ConfigError("cavity: non-finite delta_c");
    if (!(kappa > 0.0) || !std::isfinite(kappa))
        throw ConfigError("cavity: kappa must be finite and > 0");
    if (!(amplitude > 0.0) || !std::isfinite(amplitude))
        throw ConfigError("cavity: amplitude must be finite and > 0");
}

void FrequencyGrid::validate() const {
    if (!std::isfinite(min) || !std::isfinite(max)) throw ConfigError("grid: non-finite bounds");
    if (!(min < max)) throw ConfigError("grid: min must be < max");
    if (steps < 2) throw ConfigError("grid: steps must be >= 2");
}

}  // namespace collspec
