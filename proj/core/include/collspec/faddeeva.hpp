#pragma once

#include "collspec/types.hpp"

namespace collspec {

/// Scaled complementary error function w(z) = exp(-z^2) erfc(-iz) on the
/// closed upper half-plane.
///
/// Evaluated with a power series near the origin and a Laplace
/// continued-fraction / pole-shifted recurrence elsewhere; relative accuracy
/// is ~1e-13 over the region exercised here (|Re z| <= 500, Im z in [0, 100])
/// and degrades gracefully far outside it.
///
/// Throws NumericError for non-finite z or Im z < 0.
Complex wofz(Complex z);

/// Coherent average of a unit-strength Lorentzian of half-width `gamma` over
/// a Gaussian distribution of line positions (mean, sigma):
///
///   integral  d delta  p(delta; mean, sigma) / (omega - delta + i gamma)
///
/// equal to -i sqrt(pi)/(sqrt(2) sigma) * w((omega - mean + i gamma)/(sqrt(2) sigma)).
/// Requires sigma > 0 and gamma > 0 (the sigma = 0 case is routed upstream to
/// the exact Lorentzian).  Throws NumericError on domain violations.
Complex gaussian_lorentzian_average(double omega, double mean, double sigma, double gamma);

}  // namespace collspec
