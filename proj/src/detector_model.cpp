#include "harvestlab/detector_model.hpp"
#include "harvestlab/faddeeva.hpp"

#include <cmath>

namespace harvestlab {

namespace {

// Below this separation the (1/L)-prefactored kernels switch to their
// Taylor form in L^2 (removable singularity in f, Re g).
constexpr double kSmallSeparation = 1e-4;

// Below this dz the boundary and flat brackets of P_D cancel to O(dz^2);
// the odd kernel series gives the difference directly.
constexpr double kSmallDz = 1e-2;

} // namespace

void DetectorPair::validate() const
{
    if (!(std::isfinite(omega_a) && std::isfinite(omega_b)))
        throw std::invalid_argument("DetectorPair: gaps must be finite");
    if (omega_a < 0.0)
        throw std::invalid_argument("DetectorPair: omega_a must be >= 0");
    if (omega_b < omega_a)
        throw std::invalid_argument("DetectorPair: omega_b must be >= omega_a");
    if (!(lambda > 0.0) || !(sigma > 0.0))
        throw std::invalid_argument("DetectorPair: lambda and sigma must be > 0");
}

void Geometry::validate() const
{
    if (!(std::isfinite(separation) && std::isfinite(dz)))
        throw std::invalid_argument("Geometry: fields must be finite");
    if (separation < 0.0)
        throw std::invalid_argument("Geometry: separation must be >= 0");
    if (dz < 0.0)
        throw std::invalid_argument("Geometry: dz must be >= 0");
}

double flat_probability(double gap)
{
    double v = (std::exp(-gap * gap) - sqrt_pi * gap * std::erfc(gap)) / (4.0 * pi);
    return v > 0.0 ? v : 0.0;
}

double transition_probability(double gap, double dz, ProbabilityMode mode)
{
    if (gap < 0.0)
        throw std::domain_error("transition_probability: gap must be >= 0");
    if (mode == ProbabilityMode::Boundaryless)
        return flat_probability(gap);
    if (dz < 0.0)
        throw std::domain_error("transition_probability: dz must be >= 0");
    if (dz == 0.0)
        return 0.0;
    if (dz < kSmallDz) {
        // flat bracket equals k1/(8 sqrt(pi)) identically, so
        // P = -(k3 dz^2 + k5 dz^4 + k7 dz^6)/(8 sqrt(pi)) + O(dz^8)
        KernelSeries k = boundary_kernel_series(gap);
        double a2 = dz * dz;
        double v = -(k.k3 * a2 + k.k5 * a2 * a2 + k.k7 * a2 * a2 * a2) / (8.0 * sqrt_pi);
        return v > 0.0 ? v : 0.0;
    }
    double v = flat_probability(gap) - boundary_kernel(dz, gap) / (8.0 * sqrt_pi * dz);
    return v > 0.0 ? v : 0.0;
}

double aux_f(double separation, double omega_a, double delta_omega)
{
    double beta = omega_a + 0.5 * delta_omega;
    if (separation < kSmallSeparation) {
        KernelSeries k = boundary_kernel_series(beta);
        double l2 = separation * separation;
        return 0.5 * k.k1 + k.k3 * l2 / 8.0 + k.k5 * l2 * l2 / 32.0;
    }
    return boundary_kernel(0.5 * separation, beta) / separation;
}

Complex aux_g(double separation, double delta_omega)
{
    double gamma = 0.5 * delta_omega;
    double damp = std::exp(-0.25 * separation * separation);
    double im = damp * std::cos(gamma * separation) / separation;
    if (separation < kSmallSeparation) {
        KernelSeries k = boundary_kernel_series(gamma);
        double l2 = separation * separation;
        double kernel_part = 0.5 * k.k1 + k.k3 * l2 / 8.0 + k.k5 * l2 * l2 / 32.0;
        // exp(-L^2/4) sin(gamma L)/L expanded to the same order
        double g = gamma, g3 = g * g * g, g5 = g3 * g * g;
        double sin_part = g + l2 * (-g3 / 6.0 - g / 4.0)
                        + l2 * l2 * (g5 / 120.0 + g3 / 24.0 + g / 32.0);
        return Complex(kernel_part + sin_part, im);
    }
    double re = (boundary_kernel(0.5 * separation, gamma)
                 + damp * std::sin(gamma * separation)) / separation;
    return Complex(re, im);
}

namespace {

double image_separation(const Geometry& geom)
{
    if (geom.alignment == Alignment::Parallel)
        return std::hypot(geom.separation, 2.0 * geom.dz);
    return geom.separation + 2.0 * geom.dz; // vertical
}

} // namespace

Complex correlation_c(const DetectorPair& pair, const Geometry& geom)
{
    pair.validate();
    geom.validate();
    if (!(geom.separation > 0.0))
        throw std::domain_error("correlation_c: coincident detectors");
    double d_omega = pair.delta_omega();
    double pref = std::exp(-0.25 * d_omega * d_omega) / (4.0 * sqrt_pi);
    if (geom.alignment == Alignment::Boundaryless)
        return Complex(pref * aux_f(geom.separation, pair.omega_a, d_omega), 0.0);
    if (geom.dz == 0.0)
        return Complex(0.0, 0.0);
    double diff = aux_f(geom.separation, pair.omega_a, d_omega)
                - aux_f(image_separation(geom), pair.omega_a, d_omega);
    return Complex(pref * diff, 0.0);
}

Complex correlation_x(const DetectorPair& pair, const Geometry& geom)
{
    pair.validate();
    geom.validate();
    if (!(geom.separation > 0.0))
        throw std::domain_error("correlation_x: coincident detectors");
    double d_omega = pair.delta_omega();
    double sum = 2.0 * pair.omega_a + d_omega;
    double pref = -std::exp(-0.25 * sum * sum) / (4.0 * sqrt_pi);
    if (geom.alignment == Alignment::Boundaryless)
        return pref * aux_g(geom.separation, d_omega);
    if (geom.dz == 0.0)
        return Complex(0.0, 0.0);
    Complex diff = aux_g(geom.separation, d_omega)
                 - aux_g(image_separation(geom), d_omega);
    return pref * diff;
}

TwoDetectorState evaluate(const DetectorPair& pair, const Geometry& geom)
{
    pair.validate();
    geom.validate();
    TwoDetectorState st;
    if (geom.alignment == Alignment::Boundaryless) {
        st.p_a = flat_probability(pair.omega_a);
        st.p_b = flat_probability(pair.omega_b);
    } else {
        st.p_a = transition_probability(pair.omega_a, geom.dz, ProbabilityMode::WithBoundary);
        double dz_b = geom.alignment == Alignment::Vertical ? geom.dz + geom.separation
                                                            : geom.dz;
        st.p_b = transition_probability(pair.omega_b, dz_b, ProbabilityMode::WithBoundary);
    }
    st.c = correlation_c(pair, geom);
    st.x = correlation_x(pair, geom);
    if (st.p_a * st.p_b < std::norm(st.c) - 1e-12)
        throw std::logic_error("evaluate: density-matrix positivity violated");
    return st;
}

} // namespace harvestlab
