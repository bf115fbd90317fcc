#pragma once

#include <vector>

#include "collspec/quadrature.hpp"
#include "collspec/types.hpp"

namespace collspec {

/// Continuous (or empirical) description of hyperfine inhomogeneity.
///
/// gaussian_isomer:   Gaussian spread of a uniform line-position shift; the
///                    resonance of a site with shift delta sits at omega = delta.
/// gaussian_magnetic: Gaussian spread of the doublet splitting phi; each site
///                    contributes the +/-phi transition pair.
/// discrete_list:     explicit histogram; values are detunings taken verbatim.
struct DistributionSpec {
    enum class Kind { gaussian_isomer, gaussian_magnetic, discrete_list };

    Kind kind = Kind::gaussian_isomer;
    double mean = 0.0;   ///< mean shift / mean splitting, gamma0 units
    double sigma = 0.0;  ///< distribution width, >= 0
    int points = 64;     ///< quadrature order for discretization, in [1, 512]
    std::vector<double> values;   ///< discrete_list only
    std::vector<double> weights;  ///< discrete_list only, sums to 1

    void validate() const;
    bool operator==(const DistributionSpec&) const = default;
};

/// Scalar layer response of a Gaussian-shifted single line (Voigt kernel),
/// gamma0 = 1 units.  Requires sigma > 0.
Complex gaussian_isomer_response(double mean, double sigma, double omega);

/// Scalar layer response of the +/-phi doublet with unit dipoles on a common
/// axis: 2 (omega + i) / ((omega + i)^2 - phi^2).
Complex magnetic_doublet_response(double phi, double omega);

/// Gaussian-splitting average of the doublet response: one Voigt kernel at
/// each of omega -+ mean.  Requires sigma > 0.
Complex gaussian_magnetic_response(double mean, double sigma, double omega);

/// Gauss-Hermite nodes/weights for integral exp(-x^2) f(x) dx.
struct GaussHermiteRule {
    std::vector<double> nodes;    // ascending
    std::vector<double> weights;  // sum to sqrt(pi)
};
GaussHermiteRule gauss_hermite(int n);

/// Quadrature discretization of a distribution into weighted sub-ensembles.
/// Gaussian kinds map Gauss-Hermite nodes to line parameters (isomer shift
/// delta -> one transition resonant at omega = delta; splitting phi -> the
/// +/-phi transition pair); weights are renormalized to sum to exactly 1.
/// discrete_list passes through verbatim.
EnsembleSpec discretize_distribution(const DistributionSpec& dist);

/// Independent ground truth: adaptive Gauss-Kronrod integration of the
/// defining average over [mean - 12 sigma, mean + 12 sigma].  Used by tests
/// and the oracle-check command, never on a production compute path.
Complex quadrature_response_oracle(const DistributionSpec& dist, double omega,
                                   const QuadratureOptions& opt = {});

}  // namespace collspec
