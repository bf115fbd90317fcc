#include "collspec/faddeeva.hpp"

#include <cmath>

namespace collspec {

namespace {

constexpr double kTwoOverSqrtPi = 1.12837916709551257390;  // 2/sqrt(pi)

// Region parameters: the power series is used inside the ellipse
// (x/6.3)^2 + (y/4.4)^2 < 0.292^2; outside, the Laplace continued fraction,
// evaluated by downward recurrence.  In the intermediate band the recurrence
// runs with a positive pole shift h so that it stays accurate close to the
// real axis, where the plain continued fraction loses digits.
constexpr double kXScale = 6.3;
constexpr double kYScale = 4.4;
constexpr double kSeriesBound = 0.085264;  // 0.292^2

Complex wofz_upper(double xa, double ya) {
    const double x = xa / kXScale;
    const double y = ya / kYScale;
    const double qrho = x * x + y * y;

    const double xquad = xa * xa - ya * ya;  // Re z^2
    const double yquad = 2.0 * xa * ya;      // Im z^2

    double u = 0.0;
    double v = 0.0;

    if (qrho < kSeriesBound) {
        // Power series for erf(i z) paired with exp(-z^2); term count grows
        // with the scaled radius.
        const double rho = (1.0 - 0.85 * y) * std::sqrt(qrho);
        const int n = static_cast<int>(std::lround(6.0 + 72.0 * rho));
        int j = 2 * n + 1;
        double xsum = 1.0 / static_cast<double>(j);
        double ysum = 0.0;
        for (int i = n; i >= 1; --i) {
            j -= 2;
            const double xaux = (xsum * xquad - ysum * yquad) / static_cast<double>(i);
            ysum = (xsum * yquad + ysum * xquad) / static_cast<double>(i);
            xsum = xaux + 1.0 / static_cast<double>(j);
        }
        const double u1 = -kTwoOverSqrtPi * (xsum * ya + ysum * xa) + 1.0;
        const double v1 = kTwoOverSqrtPi * (xsum * xa - ysum * ya);
        const double daux = std::exp(-xquad);
        const double u2 = daux * std::cos(yquad);
        const double v2 = -daux * std::sin(yquad);
        u = u1 * u2 - v1 * v2;
        v = u1 * v2 + v1 * u2;
    } else {
        double h = 0.0;
        double h2 = 0.0;
        int kapn = 0;
        int nu = 0;
        if (qrho > 1.0) {
            // Pure continued fraction; depth shrinks as |z| grows.
            const double rho = std::sqrt(qrho);
            nu = static_cast<int>(3.0 + 1442.0 / (26.0 * rho + 77.0));
        } else {
            const double rho = (1.0 - y) * std::sqrt(1.0 - qrho);
            h = 1.88 * rho;
            h2 = 2.0 * h;
            kapn = static_cast<int>(std::lround(7.0 + 34.0 * rho));
            nu = static_cast<int>(std::lround(16.0 + 26.0 * rho));
        }

        const bool shifted = h > 0.0;
        double qlambda = shifted ? std::pow(h2, kapn) : 0.0;

        double rx = 0.0, ry = 0.0, sx = 0.0, sy = 0.0;
        for (int n = nu; n >= 0; --n) {
            const double np1 = static_cast<double>(n + 1);
            double tx = ya + h + np1 * rx;
            double ty = xa - np1 * ry;
            const double c = 0.5 / (tx * tx + ty * ty);
            rx = c * tx;
            ry = c * ty;
            if (shifted && n <= kapn) {
                tx = qlambda + sx;
                sx = rx * tx - ry * sy;
                sy = ry * tx + rx * sy;
                qlambda /= h2;
            }
        }
        if (shifted) {
            u = kTwoOverSqrtPi * sx;
            v = kTwoOverSqrtPi * sy;
        } else {
            u = kTwoOverSqrtPi * rx;
            v = kTwoOverSqrtPi * ry;
        }
        if (ya == 0.0) u = std::exp(-xa * xa);
    }
    return {u, v};
}

}  // namespace

Complex wofz(Complex z) {
    if (!is_finite(z)) throw NumericError("wofz: non-finite argument");
    if (z.imag() < 0.0) throw NumericError("wofz: argument below the real axis (Im z < 0)");
    const double xa = std::abs(z.real());
    const Complex w = wofz_upper(xa, z.imag());
    // w(-conj z) = conj(w(z)) maps the left half of the upper plane.
    if (z.real() < 0.0) return std::conj(w);
    return w;
}

Complex gaussian_lorentzian_average(double omega, double mean, double sigma, double gamma) {
    if (!(sigma > 0.0)) throw NumericError("gaussian_lorentzian_average: sigma must be > 0");
    if (!(gamma > 0.0)) throw NumericError("gaussian_lorentzian_average: gamma must be > 0");
    const double s = std::sqrt(2.0) * sigma;
    const Complex zarg{(omega - mean) / s, gamma / s};
    const double pref = std::sqrt(M_PI) / s;
    return Complex{0.0, -pref} * wofz(zarg);
}

}  // namespace collspec
