#ifndef HARVESTLAB_MEASURES_HPP
#define HARVESTLAB_MEASURES_HPP

#include "harvestlab/detector_model.hpp"

namespace harvestlab {

struct CorrelationReport {
    double concurrence = 0.0; // per lambda^2 unless rescaled
    double mutual_info = 0.0;
    double l_plus = 0.0; // eigenvalue pair of the {P_B, C; C*, P_A} block
    double l_minus = 0.0;
    bool perturbative_ok = true; // p_a + p_b < 0.1 at the report's scale
};

// 2 max(0, |x| - sqrt(p_a p_b)).
double concurrence(const TwoDetectorState& state);

// L+ ln L+ + L- ln L- - p_a ln p_a - p_b ln p_b with 0 ln 0 = 0.
// Returns exactly 0 for c = 0 or a vanishing probability.  When |c| is
// tiny against p_a + p_b the direct form cancels catastrophically and the
// expansion MI ~ |c|^2 ln((p+d)/(p-d)) / (2d) is used instead (limit 1/p
// for d -> 0, which also covers p_a ~ p_b).
double mutual_information(const TwoDetectorState& state);

CorrelationReport make_report(const TwoDetectorState& state);

// Both measures are exactly homogeneous in lambda^2; scaling a per-unit
// report is therefore lossless.  l_plus/l_minus scale along and the
// perturbative flag is re-evaluated at the new scale.
CorrelationReport rescale_report(const CorrelationReport& report, double lambda);

} // namespace harvestlab

#endif
