#ifndef HARVESTLAB_TESTS_WOFZ_REFERENCE_HPP
#define HARVESTLAB_TESTS_WOFZ_REFERENCE_HPP

#include <complex>

namespace harvestlab::testref {

// Long-double reference for w(z) built on the pole-corrected midpoint rule
// for (i/pi) int exp(-t^2)/(z-t) dt: with step h the discretization error
// is O(exp(-pi^2/h^2)) and the strip correction 2 exp(-z^2)/(1+exp(-2 pi i
// z/h)) is exact for 0 <= Im z < pi/h.  Entirely independent of the
// production region-split path; good to ~1e-17 relative on the upper
// half-plane for |z| <= 30.
std::complex<long double> wofz_reference(std::complex<long double> z);

// erf by long-double Maclaurin series for |z| <= 2.5, else through
// wofz_reference.
std::complex<long double> erf_reference(std::complex<long double> z);

// Plain long-double Maclaurin sum for w, usable while |z| <= ~2.5; kept
// separate as a second, structurally different cross-check.
std::complex<long double> wofz_maclaurin(std::complex<long double> z);

// Laplace continued fraction in long double, for far-field cross-checks.
std::complex<long double> wofz_cf(std::complex<long double> z, int depth);

} // namespace harvestlab::testref

#endif
