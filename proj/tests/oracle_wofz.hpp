#pragma once

// Test-side oracles for the scaled complementary error function, independent
// of the production kernel: a Maclaurin series for |z| <= 4, the Laplace
// continued fraction for |z| > 4, and adaptive quadrature of the defining
// integral as the arbiter everywhere.

#include <cmath>

#include "collspec/quadrature.hpp"
#include "collspec/types.hpp"

namespace collspec::testing {

/// w(z) = e^{-z^2} (1 + (2i/sqrt(pi)) sum_m z^{2m+1} / (m! (2m+1))),
/// reliable for |z| <= 4 with Im z in [0, ~4.1].
inline Complex wofz_series(Complex z) {
    const Complex z2 = z * z;
    Complex term = z;
    Complex sum = z;
    for (int m = 1; m < 220; ++m) {
        term *= z2 / static_cast<double>(m);
        const Complex add = term / static_cast<double>(2 * m + 1);
        sum += add;
        if (std::abs(add) < 1e-18 * std::abs(sum)) break;
    }
    const Complex expz2 = std::exp(-z2);
    return expz2 + Complex{0.0, 2.0 / std::sqrt(M_PI)} * expz2 * sum;
}

/// Laplace continued fraction, evaluated backward at fixed depth.
inline Complex wofz_cf(Complex z, int depth = 60) {
    Complex f{0.0, 0.0};
    for (int k = depth; k >= 1; --k) f = (0.5 * k) / (z - f);
    return Complex{0.0, 1.0 / std::sqrt(M_PI)} / (z - f);
}

/// True when the continued fraction has converged on its own terms (two
/// depths agree); near the real axis at moderate |z| it has not.
inline bool wofz_cf_reliable(Complex z, double tol = 1e-9) {
    const Complex a = wofz_cf(z, 45);
    const Complex b = wofz_cf(z, 60);
    return std::abs(a - b) <= tol * std::abs(b);
}

/// Defining integral w(z) = (i/pi) int e^{-t^2} / (z - t) dt, Im z > 0.
inline Complex wofz_quadrature(Complex z, double abs_tol = 1e-13) {
    const double x = z.real();
    const double a = std::min(-9.0, x - 9.0);
    const double b = std::max(9.0, x + 9.0);
    QuadratureOptions opt;
    opt.abs_tol = abs_tol;
    opt.max_depth = 40;
    const Complex integral =
        integrate_gk([&](double t) { return std::exp(-t * t) / (z - t); }, a, b, opt);
    return Complex{0.0, 1.0 / M_PI} * integral;
}

}  // namespace collspec::testing
