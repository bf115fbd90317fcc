#pragma once

#include <string>
#include <vector>

#include "collspec/response.hpp"
#include "collspec/types.hpp"

namespace collspec {

/// Probe-field envelope E(t) in the transverse plane; times in 1/gamma0.
struct DriveEnvelope {
    enum class Kind { impulse, rectangular, gaussian_pulse, custom_samples };

    Kind kind = Kind::impulse;
    Vec2c amplitude{Complex{1.0, 0.0}, Complex{0.0, 0.0}};
    double start = 0.0;
    double duration = 0.0;  ///< rectangular length
    double width = 0.0;     ///< gaussian_pulse sigma (peak at `start`)
    std::vector<Vec2c> samples;  ///< custom: uniform grid from `start`
    double sample_dt = 0.0;

    /// Field at time t.  The impulse is realized as a one-step rectangle of
    /// unit area, so its value depends on the integrator step.
    Vec2c field(double t, double step) const;
    /// Time after which the drive is identically zero.
    double end_time(double step) const;
    void validate() const;
};

/// Recorded expectation values of the collective modes and the transverse
/// polarization P(t) (normalized by sqrt(N) times the mean dipole moment).
struct ModeTrajectory {
    std::size_t mode_count = 0;
    std::vector<double> times;
    std::vector<Complex> amplitudes;  ///< row-major [time][mode]
    std::vector<Vec2c> polarization;

    Complex amplitude(std::size_t time_idx, std::size_t mode) const {
        return amplitudes[time_idx * mode_count + mode];
    }
    std::size_t size() const { return times.size(); }
};

/// Largest stable/accurate step for the scenario (0.01 over the stiffest
/// rate); integrate_eom refuses dt above this bound.
double suggest_dt(const EnsembleSpec& ensemble, const CollectiveCoupling& coupling);

/// Fixed-step fourth-order integration of the linearized equations of motion
///   db_k/dt = (i detuning_k - gamma_k) b_k
///             + (iJ - Gamma) sqrt(p_k) d_k . S(t)   with S = sum sqrt(p) d* b
///             - i sqrt(p_k) d_k . E(t),
/// recording every `record_stride`-th step (plus the final state).
/// Throws ConfigError for dt above the stability bound, NumericError if the
/// state leaves the finite range.
ModeTrajectory integrate_eom(const EnsembleSpec& ensemble, const CollectiveCoupling& coupling,
                             const DriveEnvelope& drive, double t_max, double dt,
                             int record_stride = 1);

/// Impulse response mapped to the frequency domain: drives the system with
/// unit-area kicks along both transverse axes, Fourier transforms P(t), and
/// normalizes by the exact transform of the discrete kick so the result is
/// chi(omega)/chi0 on the requested grid.  `tail_fraction` estimates the
/// truncated-tail magnitude relative to the peak (a truncation warning when
/// above ~1e-6).
struct ImpulseSpectrumResult {
    Spectrum spectrum;
    double tail_fraction = 0.0;
};

ImpulseSpectrumResult impulse_response_spectrum(const EnsembleSpec& ensemble,
                                                const CollectiveCoupling& coupling,
                                                const FrequencyGrid& grid, double t_max,
                                                double dt);

}  // namespace collspec
