#ifndef HARVESTLAB_DETECTOR_MODEL_HPP
#define HARVESTLAB_DETECTOR_MODEL_HPP

#include "harvestlab/common.hpp"

namespace harvestlab {

// Everything below works in units of the switching width: energy gaps are
// the dimensionless products Omega*sigma, distances are L/sigma and
// dz/sigma, and all state entries are reported divided by lambda^2.  The
// coupling and sigma fields exist for report formatting only.

struct DetectorPair {
    double omega_a = 0.0; // Omega_A * sigma, >= 0
    double omega_b = 0.0; // Omega_B * sigma, >= omega_a
    double lambda = 1.0;  // coupling, > 0
    double sigma = 1.0;   // switching width, > 0 (the time unit)

    double delta_omega() const { return omega_b - omega_a; }
    void validate() const;
};

enum class Alignment { Parallel, Vertical, Boundaryless };

struct Geometry {
    Alignment alignment = Alignment::Parallel;
    double separation = 0.0; // L / sigma, > 0 for the correlation terms
    double dz = 0.0;         // distance to the mirror / sigma; 0 = on-boundary limit

    void validate() const;
};

// Leading-order density-matrix content, per lambda^2.
struct TwoDetectorState {
    double p_a = 0.0;
    double p_b = 0.0;
    Complex c{0.0, 0.0};
    Complex x{0.0, 0.0};
};

enum class ProbabilityMode { WithBoundary, Boundaryless };

// Single-detector transition probability.  WithBoundary evaluates the
// mirror term through boundary_kernel (series form below dz ~ 1e-2, where
// the flat bracket and the kernel cancel to O(dz^2)); dz = 0 returns the
// on-boundary limit 0 exactly.
double transition_probability(double gap, double dz, ProbabilityMode mode);

// Flat-space bracket alone: (1/4pi) [exp(-g^2) - sqrt(pi) g erfc(g)].
double flat_probability(double gap);

// Auxiliary functions of the correlation closed forms.
// f(L) = K(L/2, omega_a + delta_omega/2) / L, real.
double aux_f(double separation, double omega_a, double delta_omega);
// g(L) = [K(L/2, g2) + exp(-L^2/4) sin(g2 L)]/L + i exp(-L^2/4) cos(g2 L)/L
// with g2 = delta_omega/2; the 1/L pole in Im g is physical.
Complex aux_g(double separation, double delta_omega);

// Correlation entries per lambda^2; the image argument is
// sqrt(L^2 + 4 dz^2) (parallel), L + 2 dz (vertical), or absent.
// dz = 0 returns the exact limit 0 for the boundary alignments.
Complex correlation_c(const DetectorPair& pair, const Geometry& geom);
Complex correlation_x(const DetectorPair& pair, const Geometry& geom);

// Assembles the full leading-order state.  Vertical alignment evaluates
// p_b at dz + L.  Enforces p_a p_b >= |c|^2 (1e-12 slack).
TwoDetectorState evaluate(const DetectorPair& pair, const Geometry& geom);

} // namespace harvestlab

#endif
