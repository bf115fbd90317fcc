#pragma once

#include <string>
#include <vector>

#include "collspec/config.hpp"
#include "collspec/types.hpp"

namespace collspec {

/// Fe-57 hyperfine level-scheme inputs.  Ground 1/2 and excited 3/2 sublevels
/// shift by m * split_per_T * B; both per-Tesla constants are taken positive,
/// so the dm=0 doublet splitting is phi = (1/2)(ground - excited) * B > 0.
struct HyperfineScheme {
    enum class Selection { dm0_only, all_six };

    double b_hf_tesla = 0.0;
    double isomer_shift_nev = 0.0;
    double ground_split_nev_per_t = 5.71;
    double excited_split_nev_per_t = 3.26;
    Selection selection = Selection::dm0_only;
    /// Optional per-transition dipoles for all_six (the six M1 amplitudes are
    /// not fixed here; default is equal unit dipoles on one axis).
    std::vector<Vec2c> dipole_override;

    void validate() const;
};

/// Single sub-ensemble with the selected transitions, detunings in gamma0
/// units: (excited shift - ground shift + isomer shift) / gamma0.
EnsembleSpec build_fe57_scheme(const HyperfineScheme& scheme, double gamma0_nev);

/// Cavity-mode working point to collective coupling:
///   J = A dc / (dc^2 + k^2),  Gamma = A k / (dc^2 + k^2).
CollectiveCoupling cavity_coupling(const CavityParams& params);

/// One curve of a named scenario family.
struct PresetMember {
    std::string label;      ///< e.g. "sigma=3.5" or "J=10"
    ScenarioConfig config;
};

/// A named scenario family; figure presets hold one member per plotted curve,
/// cavity working points hold a single member.
struct Preset {
    std::string name;
    std::string title;
    std::vector<PresetMember> members;
};

/// Resolve a stable preset name: fig5, fig6, fig7, fig8, fig9,
/// cavity_2p32mrad, cavity_min1, cavity_min3.  Throws ConfigError on unknown
/// names.
Preset paper_preset(const std::string& name);

std::vector<std::string> preset_names();

}  // namespace collspec
