#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace collspec {

using Complex = std::complex<double>;

/// Raised for malformed or physically invalid configuration input.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a computation cannot proceed (pole on grid, divergent
/// integrator state, quadrature non-convergence, invalid kernel argument).
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Small fixed-size complex linear algebra for the transverse polarization
// plane.  The guided geometry pins the dimension at 2, so everything is
// closed-form; no external linear-algebra dependency.
// ---------------------------------------------------------------------------

struct Vec2c {
    Complex x{0.0, 0.0};
    Complex y{0.0, 0.0};

    friend Vec2c operator+(const Vec2c& a, const Vec2c& b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2c operator-(const Vec2c& a, const Vec2c& b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2c operator*(const Complex& s, const Vec2c& v) { return {s * v.x, s * v.y}; }
    friend Vec2c operator*(const Vec2c& v, const Complex& s) { return {s * v.x, s * v.y}; }
    Vec2c& operator+=(const Vec2c& b) { x += b.x; y += b.y; return *this; }
    bool operator==(const Vec2c&) const = default;
};

/// Unconjugated dot product a.x*b.x + a.y*b.y (matches the d.E field contraction).
inline Complex dot(const Vec2c& a, const Vec2c& b) { return a.x * b.x + a.y * b.y; }

/// Conjugated inner product conj(a) . b.
inline Complex inner(const Vec2c& a, const Vec2c& b) { return std::conj(a.x) * b.x + std::conj(a.y) * b.y; }

inline double norm2(const Vec2c& v) { return std::norm(v.x) + std::norm(v.y); }
inline double norm(const Vec2c& v) { return std::sqrt(norm2(v)); }

inline bool is_finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }
inline bool is_finite(const Vec2c& v) { return is_finite(v.x) && is_finite(v.y); }

/// 2x2 complex matrix, row major: [[m00, m01], [m10, m11]].
struct Mat2c {
    Complex m00{0.0, 0.0};
    Complex m01{0.0, 0.0};
    Complex m10{0.0, 0.0};
    Complex m11{0.0, 0.0};

    static Mat2c identity() { return {{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}}; }

    friend Mat2c operator+(const Mat2c& a, const Mat2c& b) {
        return {a.m00 + b.m00, a.m01 + b.m01, a.m10 + b.m10, a.m11 + b.m11};
    }
    friend Mat2c operator-(const Mat2c& a, const Mat2c& b) {
        return {a.m00 - b.m00, a.m01 - b.m01, a.m10 - b.m10, a.m11 - b.m11};
    }
    friend Mat2c operator*(const Complex& s, const Mat2c& a) {
        return {s * a.m00, s * a.m01, s * a.m10, s * a.m11};
    }
    friend Mat2c operator*(const Mat2c& a, const Mat2c& b) {
        return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
                a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
    }
    friend Vec2c operator*(const Mat2c& a, const Vec2c& v) {
        return {a.m00 * v.x + a.m01 * v.y, a.m10 * v.x + a.m11 * v.y};
    }
    Mat2c& operator+=(const Mat2c& b) { m00 += b.m00; m01 += b.m01; m10 += b.m10; m11 += b.m11; return *this; }
    bool operator==(const Mat2c&) const = default;

    Complex trace() const { return m00 + m11; }
    Complex det() const { return m00 * m11 - m01 * m10; }
    double frobenius() const {
        return std::sqrt(std::norm(m00) + std::norm(m01) + std::norm(m10) + std::norm(m11));
    }
};

inline bool is_finite(const Mat2c& m) {
    return is_finite(m.m00) && is_finite(m.m01) && is_finite(m.m10) && is_finite(m.m11);
}

/// Outer product conj(d) (x) d, the Hermitian PSD rank-1 dipole projector.
inline Mat2c outer_conj(const Vec2c& d) {
    return {std::conj(d.x) * d.x, std::conj(d.x) * d.y,
            std::conj(d.y) * d.x, std::conj(d.y) * d.y};
}

/// Closed-form adjugate inverse with a singularity guard.
/// Throws NumericError when |det| falls below rel_tol * scale^2.
Mat2c inverse(const Mat2c& m, double rel_tol = 1e-12);

// ---------------------------------------------------------------------------
// Domain types.  All frequencies are dimensionless in units of gamma0; the
// physical scale (gamma0 in neV) exists only at the config/output boundary.
// ---------------------------------------------------------------------------

/// One resonance line of a sub-ensemble.
struct Transition {
    double detuning = 0.0;     ///< line position parameter, appears as +detuning in denominators
    double linewidth = 1.0;    ///< HWHM decay rate, > 0
    Vec2c dipole{Complex{1.0, 0.0}, Complex{0.0, 0.0}};  ///< transverse dipole projection

    void validate(const std::string& where) const;
    bool operator==(const Transition&) const = default;
};

/// A permutationally uniform group of emitters sharing a transition set.
struct SubEnsemble {
    double weight = 1.0;                  ///< fraction of emitters, in (0, 1]
    std::vector<Transition> transitions;  ///< non-empty

    void validate(const std::string& where) const;
    bool operator==(const SubEnsemble&) const = default;
};

/// Weighted partition of the full ensemble; weights sum to 1 within 1e-9.
struct EnsembleSpec {
    std::vector<SubEnsemble> sub_ensembles;

    void validate() const;
    /// Sum over sub-ensembles of weight * |dipole|^2 (the oscillator strength
    /// that fixes the response sum rule).
    double total_dipole_weight() const;
    bool operator==(const EnsembleSpec&) const = default;
};

/// Waveguide-mediated coupling: coherent shift and incoherent broadening,
/// both in units of gamma0.
struct CollectiveCoupling {
    double lamb_shift = 0.0;   ///< J
    double broadening = 0.0;   ///< Gamma, >= 0

    Complex g() const { return {lamb_shift, broadening}; }
    void validate() const;
    bool operator==(const CollectiveCoupling&) const = default;
};

/// Cavity-mode working point; maps to CollectiveCoupling through the
/// detuning/loss formula (see presets.hpp).
struct CavityParams {
    double delta_c = 0.0;    ///< cavity detuning, gamma0 units
    double kappa = 1.0;      ///< cavity loss, > 0
    double amplitude = 1.0;  ///< overall strength, > 0 (gamma0^2 units)

    void validate() const;
    bool operator==(const CavityParams&) const = default;
};

/// Uniform frequency grid in gamma0 units.
struct FrequencyGrid {
    double min = -10.0;
    double max = 10.0;
    int steps = 201;

    double spacing() const { return (max - min) / static_cast<double>(steps - 1); }
    double omega(int i) const {
        return min + (max - min) * (static_cast<double>(i) / static_cast<double>(steps - 1));
    }
    void validate() const;
    bool operator==(const FrequencyGrid&) const = default;
};

}  // namespace collspec
