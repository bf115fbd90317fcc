#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "collspec/response.hpp"
#include "collspec/types.hpp"

namespace collspec {

/// The two complex resonances of the uniform magnetic doublet.
struct PolePair {
    Complex omega_plus;   ///< -i gamma0 - (J + i Gamma) + sqrt((J+iGamma)^2 + phi^2)
    Complex omega_minus;  ///< conjugate branch (principal square root, Re >= 0)
};

/// Denominator of the uniform-doublet susceptibility,
/// (w + i g0)^2 + 2 (J + i Gamma)(w + i g0) - phi^2; vanishes at the poles.
Complex doublet_denominator(Complex omega, double j, double gamma_big, double phi,
                            double gamma0 = 1.0);

PolePair doublet_poles(double j, double gamma_big, double phi, double gamma0 = 1.0);

/// Eigen-decomposition of the doublet coupling matrix
/// M = (J+iGamma) [[1,1],[1,1]] + diag(phi + i gamma0, -phi + i gamma0).
/// lambda_plus is the branch that tends to 2(J+iGamma) + i gamma0 as phi -> 0
/// (the symmetric, strongly driven mode).
struct ModePair {
    Complex lambda_plus;
    Complex lambda_minus;
    Vec2c e_plus;   ///< unit-norm eigenvector of lambda_plus
    Vec2c e_minus;  ///< unit-norm eigenvector of lambda_minus
};

ModePair doublet_modes(double j, double gamma_big, double phi, double gamma0 = 1.0);

/// Shape metrics of a |chi/chi0|^2 curve.
struct PeakMetrics {
    double argmax = 0.0;                  ///< parabolic sub-grid refinement
    double peak_value = 0.0;              ///< refined maximum
    std::optional<double> fwhm;           ///< empty when a half-max crossing leaves the grid
    std::optional<double> asymmetry;      ///< (right half-width - left)/fwhm, in [-1, 1]
    std::vector<std::pair<double, double>> minima;  ///< interior local minima (location, value)
};

/// Metrics over an arbitrary sampled curve (ascending x, >= 3 points).
PeakMetrics peak_metrics(const std::vector<double>& x, const std::vector<double>& y);

/// Metrics of a scalar spectrum's |chi/chi0|^2.  Throws ConfigError for
/// non-scalar spectra (the plotted quantity is the scalar curve).
PeakMetrics peak_metrics(const Spectrum& spectrum);

}  // namespace collspec
