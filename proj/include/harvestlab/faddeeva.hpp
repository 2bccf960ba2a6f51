#ifndef HARVESTLAB_FADDEEVA_HPP
#define HARVESTLAB_FADDEEVA_HPP

#include "harvestlab/common.hpp"

namespace harvestlab {

// Faddeeva function w(z) = exp(-z^2) erfc(-iz).
//
// Region-split evaluation: a Maclaurin-type series in a low band along the
// real axis, the Laplace continued fraction outside an ellipse around the
// origin, and a continued-fraction seed transported down by Taylor steps in
// between.  Relative accuracy is ~1e-13 on the closed upper half-plane for
// |z| <= 30.  The lower half-plane goes through w(z) = 2 exp(-z^2) - w(-z)
// and inherits the exponential growth of the function itself there.
Complex faddeeva(Complex z);

// erf of a complex argument, erf(z) = 1 - exp(-z^2) w(iz), odd by
// construction.  Throws std::overflow_error once exp(-z^2) leaves double
// range (Im(z)^2 - Re(z)^2 > ~705); boundary_kernel covers that regime.
Complex erf_complex(Complex z);

// K(a,b) = exp(-a^2) * ( Im[exp(2iab) erf(b + ia)] - sin(2ab) ),
// the overflow-prone combination behind every boundary term, evaluated as
//     K(a,b) = -exp(-b^2) Im w(-a + ib),
// which is O(exp(-b^2)/a) and stable for arbitrarily large a.
double boundary_kernel(double a, double b);

// Odd Taylor coefficients of K(.,b) about a = 0:
// K(a,b) = k1 a + k3 a^3 + k5 a^5 + k7 a^7 + O(a^9).
struct KernelSeries {
    double k1, k3, k5, k7;
};
KernelSeries boundary_kernel_series(double b);

} // namespace harvestlab

#endif
