#ifndef HARVESTLAB_OPTIMIZE_HPP
#define HARVESTLAB_OPTIMIZE_HPP

#include "harvestlab/measures.hpp"

#include <optional>
#include <string>
#include <vector>

namespace harvestlab {

enum class Quantity { Concurrence, MutualInfo, PA, PB, AbsC, AbsX };

struct OptimizeResult {
    double delta_omega_star = 0.0;
    double value_at_star = 0.0;
    bool at_lower_bound = false; // optimum pinned at delta_omega = 0
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    bool flat_objective = false; // scan spread below 1e-14
};

// Maximizes concurrence or mutual information over the gap difference in
// [0, bound]: a 64-point log-spaced scan (plus 0) guards against
// multi-bump objectives, then golden-section refinement narrows the best
// bracket to relative width 1e-6.  Ties at zero resolve to the smallest
// gap difference.
OptimizeResult optimal_gap(double omega_a, const Geometry& geom,
                           Quantity quantity, double bound = 20.0);

struct GapCurveRow {
    double dz = 0.0;
    OptimizeResult result{};
    std::optional<std::string> error;
};

// One optimal_gap per dz; per-row failures land in the error column.
std::vector<GapCurveRow> optimal_gap_curve(double omega_a, double separation,
                                           const std::vector<double>& dz_grid,
                                           Alignment alignment, Quantity quantity);

enum class SweepVariable { Separation, Dz, DeltaOmega, OmegaA };
enum class GridSpacing { Linear, Log };

struct SweepSpec {
    SweepVariable variable = SweepVariable::Dz;
    double lo = 0.0;
    double hi = 1.0;
    int n_points = 2;
    GridSpacing spacing = GridSpacing::Linear;
    DetectorPair fixed_pair{};
    Geometry fixed_geometry{};
    std::vector<Quantity> quantities{Quantity::Concurrence, Quantity::MutualInfo};

    void validate() const;
};

struct SweepRow {
    double x = 0.0;
    std::vector<double> values; // one per requested quantity
    std::optional<std::string> error;
};

// Deterministic row-per-grid-point evaluation; reruns are bit-identical.
std::vector<SweepRow> sweep(const SweepSpec& spec);

const char* quantity_name(Quantity q);
double quantity_value(Quantity q, const TwoDetectorState& state);

} // namespace harvestlab

#endif
