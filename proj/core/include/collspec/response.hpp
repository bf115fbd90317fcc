#pragma once

#include <optional>
#include <vector>

#include "collspec/config.hpp"
#include "collspec/types.hpp"

namespace collspec {

/// Frequency sweep result: chi(omega)/chi0 per grid point.
///
/// When every dipole in the scenario is parallel (or the model is a scalar
/// distribution), the scalar path runs and `chi_scalar` holds the response
/// along the common dipole axis with `abs2` = |chi_scalar|^2; `chi` always
/// holds the full 2x2 tensor.
struct Spectrum {
    std::vector<double> omega;
    std::vector<Mat2c> chi;
    bool scalar = false;
    std::vector<Complex> chi_scalar;
    std::vector<double> abs2;

    std::size_t size() const { return omega.size(); }
};

/// Layer response matrix F(omega) = sum_n p_n sum_mu (d* (x) d) / (omega +
/// detuning + i linewidth), gamma0 = 1 units.
Mat2c layer_response(const EnsembleSpec& ensemble, double omega);

/// Collective susceptibility chi/chi0 = (I + G F)^{-1} F.
/// Throws NumericError when (I + G F) is singular within 1e-12 (pole on grid).
Mat2c collective_chi(const Mat2c& f, const CollectiveCoupling& g);

/// Scalar reduction chi = f / (1 + G f) for parallel-dipole scenarios.
Complex collective_chi_scalar(Complex f, const CollectiveCoupling& g);

/// Comparator implementing the shifted-and-broadened hypothesis: every
/// transition is moved by (J + i Gamma) |d|^2 in its own denominator, with no
/// cross-coupling.  Coincides with collective_chi only for a single
/// transition; the difference quantifies the non-Lamb-shift structure.
Mat2c naive_lamb_chi(const EnsembleSpec& ensemble, const CollectiveCoupling& g, double omega);

/// True when all dipoles of the ensemble are complex-collinear; `axis`
/// returns the common unit direction.
bool parallel_dipoles(const EnsembleSpec& ensemble, Vec2c* axis = nullptr);

/// Deterministic sweep of collective_chi over the scenario grid.  Work fans
/// out over `threads` workers (0 = hardware concurrency); output ordering and
/// bytes are independent of the worker count.  Distribution models evaluate
/// through their closed forms.  Pole-on-grid errors report the offending
/// omega and grid index.
Spectrum sweep(const ScenarioConfig& config, int threads = 1);

}  // namespace collspec
