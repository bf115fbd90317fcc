#pragma once

#include <string>
#include <vector>

#include "collspec/analysis.hpp"
#include "collspec/dynamics.hpp"
#include "collspec/response.hpp"

namespace collspec {

inline constexpr const char* kToolName = "collspec";
inline constexpr const char* kToolVersion = "0.1.0";

/// Shortest round-trip decimal form of a double (17 significant digits are
/// kept when needed); identical bytes across IEEE-754 platforms.
std::string format_double(double v);

/// Scalar runs: omega,re_chi,im_chi,abs2.  Tensor runs: omega plus
/// re/im columns per component (xx, xy, yx, yy).
std::string spectrum_csv(const Spectrum& spectrum);

/// Columns t, re_b_k, im_b_k per mode, then re_Px, im_Px, re_Py, im_Py.
std::string trajectory_csv(const ModeTrajectory& trajectory);

/// Static SVG plot of |chi/chi0|^2 curves (gamma0 units on the abscissa).
struct SvgCurve {
    std::string label;
    const Spectrum* spectrum;
};
std::string spectrum_svg(const std::vector<SvgCurve>& curves, const std::string& title);

void write_file(const std::string& path, const std::string& content);

}  // namespace collspec
