#include "collspec/analysis.hpp"

#include <algorithm>
#include <cmath>

namespace collspec {

namespace {

// Principal square root with the Re >= 0 tie convention.
Complex principal_sqrt(Complex z) {
    Complex r = std::sqrt(z);
    if (r.real() < 0.0 || (r.real() == 0.0 && r.imag() < 0.0)) r = -r;
    return r;
}

Vec2c normalized(Vec2c v) {
    const double n = norm(v);
    return {v.x / n, v.y / n};
}

// Parabolic refinement of a grid extremum at interior index i.
void refine_parabolic(const std::vector<double>& x, const std::vector<double>& y, std::size_t i,
                      double* x_ref, double* y_ref) {
    const double denom = y[i - 1] - 2.0 * y[i] + y[i + 1];
    if (denom == 0.0) {
        *x_ref = x[i];
        *y_ref = y[i];
        return;
    }
    const double offset = 0.5 * (y[i - 1] - y[i + 1]) / denom;
    const double h = x[i + 1] - x[i];
    *x_ref = x[i] + offset * h;
    *y_ref = y[i] - 0.25 * (y[i - 1] - y[i + 1]) * offset;
}

}  // namespace

Complex doublet_denominator(Complex omega, double j, double gamma_big, double phi, double gamma0) {
    const Complex u = omega + Complex{0.0, gamma0};
    const Complex s{j, gamma_big};
    return u * u + 2.0 * s * u - phi * phi;
}

PolePair doublet_poles(double j, double gamma_big, double phi, double gamma0) {
    if (!(gamma0 > 0.0)) throw NumericError("doublet_poles: gamma0 must be > 0");
    const Complex s{j, gamma_big};
    const Complex root = principal_sqrt(s * s + phi * phi);
    const Complex base = Complex{0.0, -gamma0} - s;
    return {base + root, base - root};
}

ModePair doublet_modes(double j, double gamma_big, double phi, double gamma0) {
    if (!(gamma0 > 0.0)) throw NumericError("doublet_modes: gamma0 must be > 0");
    const Complex s{j, gamma_big};
    const Complex ig{0.0, gamma0};
    const Complex root = principal_sqrt(s * s + phi * phi);

    ModePair modes;
    modes.lambda_plus = s + ig + root;
    modes.lambda_minus = s + ig - root;

    // M = [[s + phi + ig, s], [s, s - phi + ig]]; for eigenvalue L an
    // eigenvector is (M01, L - M00) or (L - M11, M10), whichever is larger.
    auto eigvec = [&](Complex lambda) {
        const Vec2c a{s, lambda - (s + phi + ig)};
        const Vec2c b{lambda - (s - phi + ig), s};
        Vec2c v = (norm2(a) >= norm2(b)) ? a : b;
        if (norm2(v) == 0.0) v = {Complex{1.0, 0.0}, Complex{0.0, 0.0}};  // s = 0, phi = 0
        v = normalized(v);
        // Fix the overall phase: largest component real positive.
        const Complex lead = (std::abs(v.x) >= std::abs(v.y)) ? v.x : v.y;
        const Complex phase = lead / std::abs(lead);
        return Vec2c{v.x / phase, v.y / phase};
    };
    modes.e_plus = eigvec(modes.lambda_plus);
    modes.e_minus = eigvec(modes.lambda_minus);
    return modes;
}

PeakMetrics peak_metrics(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 3)
        throw ConfigError("peak_metrics: need at least 3 samples");

    PeakMetrics m;
    std::size_t imax = 0;
    for (std::size_t i = 1; i < y.size(); ++i)
        if (y[i] > y[imax]) imax = i;

    if (imax == 0 || imax + 1 == y.size()) {
        m.argmax = x[imax];
        m.peak_value = y[imax];
    } else {
        refine_parabolic(x, y, imax, &m.argmax, &m.peak_value);
    }

    // Half-max crossings by linear interpolation outward from the peak.
    const double half = 0.5 * m.peak_value;
    std::optional<double> left, right;
    for (std::size_t i = imax; i-- > 0;) {
        if (y[i] < half) {
            const double t = (half - y[i]) / (y[i + 1] - y[i]);
            left = x[i] + t * (x[i + 1] - x[i]);
            break;
        }
    }
    for (std::size_t i = imax + 1; i < y.size(); ++i) {
        if (y[i] < half) {
            const double t = (half - y[i - 1]) / (y[i] - y[i - 1]);
            right = x[i - 1] + t * (x[i] - x[i - 1]);
            break;
        }
    }
    if (left && right) {
        m.fwhm = *right - *left;
        m.asymmetry = ((*right - m.argmax) - (m.argmax - *left)) / *m.fwhm;
    }

    for (std::size_t i = 1; i + 1 < y.size(); ++i) {
        if (y[i] < y[i - 1] && y[i] < y[i + 1]) {
            double xr, yr;
            refine_parabolic(x, y, i, &xr, &yr);
            m.minima.emplace_back(xr, yr);
        }
    }
    return m;
}

PeakMetrics peak_metrics(const Spectrum& spectrum) {
    if (!spectrum.scalar)
        throw ConfigError("peak_metrics: defined for scalar spectra (|chi/chi0|^2 curve)");
    return peak_metrics(spectrum.omega, spectrum.abs2);
}

}  // namespace collspec
