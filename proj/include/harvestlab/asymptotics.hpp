#ifndef HARVESTLAB_ASYMPTOTICS_HPP
#define HARVESTLAB_ASYMPTOTICS_HPP

#include "harvestlab/detector_model.hpp"

namespace harvestlab {

// Limiting closed forms for identical detectors (gap omega for both), in
// sigma = 1 units and per lambda^2.  Each carries its regime as an explicit
// label; the "<<" orderings are interpreted as ratio <= 1/2, a violation up
// to a further factor 2 only sets the warning flag, and anything beyond
// throws std::domain_error.

enum class GapClass { SmallGap, LargeGap };
enum class Zone { NearBoundary, FarBoundary };
enum class SepClass { SmallL, LargeL };

struct Regime {
    GapClass gap_class = GapClass::SmallGap;
    Zone zone = Zone::NearBoundary;
    SepClass sep_class = SepClass::SmallL;
};

struct AsymptoticPoint {
    double omega = 0.0;      // Omega * sigma, both detectors
    double separation = 0.0; // L / sigma
    double dz = 0.0;         // dz / sigma
};

struct ApproxResult {
    double value = 0.0;
    bool regime_warning = false;
};

// Near-boundary transition probability, (dz^2/2pi)(1/3 - sqrt(pi) omega / 2).
double approx_probability_near(double gap, double dz);

// Near-boundary |X| for small gaps, branched on the separation class.
ApproxResult approx_correlation_x_near(const AsymptoticPoint& p, SepClass sep);

// Near-boundary C for small gaps, branched on the separation class.
ApproxResult approx_correlation_c_near(const AsymptoticPoint& p, SepClass sep);

// Piecewise concurrence limits; regimes with vanishing leading order return 0.
ApproxResult approx_concurrence(const Regime& regime, Alignment alignment,
                                const AsymptoticPoint& p);

// Piecewise mutual-information limits.
ApproxResult approx_mutual_info(const Regime& regime, Alignment alignment,
                                const AsymptoticPoint& p);

} // namespace harvestlab

#endif
