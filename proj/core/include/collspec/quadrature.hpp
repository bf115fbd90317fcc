#pragma once

#include <functional>

#include "collspec/types.hpp"

namespace collspec {

struct QuadratureOptions {
    double abs_tol = 1e-10;
    int max_depth = 30;
};

/// Adaptive Gauss-Kronrod (G7/K15) integration of a complex-valued function
/// over [a, b].  Bisects until the local K15-G7 discrepancy meets the
/// interval's share of abs_tol.  Throws NumericError if max_depth is
/// exhausted anywhere.
Complex integrate_gk(const std::function<Complex(double)>& f, double a, double b,
                     const QuadratureOptions& opt = {});

}  // namespace collspec
