#include "harvestlab/optimize.hpp"
#include "harvestlab/parallel.hpp"

#include <cmath>
#include <limits>

namespace harvestlab {

const char* quantity_name(Quantity q)
{
    switch (q) {
    case Quantity::Concurrence: return "concurrence";
    case Quantity::MutualInfo: return "mutual_info";
    case Quantity::PA: return "p_a";
    case Quantity::PB: return "p_b";
    case Quantity::AbsC: return "abs_c";
    case Quantity::AbsX: return "abs_x";
    }
    return "?";
}

double quantity_value(Quantity q, const TwoDetectorState& state)
{
    switch (q) {
    case Quantity::Concurrence: return concurrence(state);
    case Quantity::MutualInfo: return mutual_information(state);
    case Quantity::PA: return state.p_a;
    case Quantity::PB: return state.p_b;
    case Quantity::AbsC: return std::abs(state.c);
    case Quantity::AbsX: return std::abs(state.x);
    }
    return 0.0;
}

namespace {

constexpr double kInvPhi = 0.61803398874989484820;

struct ScanBest {
    double x, value;
};

} // namespace

OptimizeResult optimal_gap(double omega_a, const Geometry& geom,
                           Quantity quantity, double bound)
{
    if (!(bound > 0.0))
        throw std::invalid_argument("optimal_gap: bound must be > 0");
    if (quantity != Quantity::Concurrence && quantity != Quantity::MutualInfo)
        throw std::invalid_argument("optimal_gap: quantity must be a correlation measure");
    geom.validate();

    auto objective = [&](double d_omega) {
        DetectorPair pair{omega_a, omega_a + d_omega, 1.0, 1.0};
        return quantity_value(quantity, evaluate(pair, geom));
    };

    // coarse scan: 0 plus 64 log-spaced points on [1e-3, bound]
    const int n_log = 64;
    const double lo_log = std::min(1e-3, 0.5 * bound);
    std::vector<double> xs;
    xs.reserve(n_log + 1);
    xs.push_back(0.0);
    for (int i = 0; i < n_log; ++i)
        xs.push_back(lo_log * std::pow(bound / lo_log, double(i) / (n_log - 1)));

    std::vector<double> fs(xs.size());
    std::size_t best = 0;
    double fmin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < xs.size(); ++i) {
        fs[i] = objective(xs[i]);
        if (fs[i] > fs[best])
            best = i;
        fmin = std::min(fmin, fs[i]);
    }

    OptimizeResult res;
    if (fs[best] - fmin < 1e-14) {
        res.flat_objective = true;
        res.delta_omega_star = 0.0;
        res.value_at_star = fs[0];
        res.at_lower_bound = true;
        res.bracket_lo = 0.0;
        res.bracket_hi = bound;
        return res;
    }

    double a = best > 0 ? xs[best - 1] : 0.0;
    double b = best + 1 < xs.size() ? xs[best + 1] : bound;
    res.bracket_lo = a;
    res.bracket_hi = b;

    // golden-section refinement; track the best sample seen anywhere so the
    // refined result can never fall below the coarse scan
    ScanBest champion{xs[best], fs[best]};
    auto consider = [&](double x, double f) {
        if (f > champion.value || (f == champion.value && x < champion.x))
            champion = {x, f};
    };
    consider(a, best > 0 ? fs[best - 1] : fs[0]);
    if (best + 1 < xs.size())
        consider(b, fs[best + 1]);

    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = objective(c), fd = objective(d);
    consider(c, fc);
    consider(d, fd);
    while (b - a > 1e-6 * std::max(b, 1e-9)) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = objective(c);
            consider(c, fc);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = objective(d);
            consider(d, fd);
        }
    }

    res.delta_omega_star = champion.x;
    res.value_at_star = champion.value;
    res.at_lower_bound = champion.x == 0.0;
    if (res.value_at_star <= 0.0 && quantity == Quantity::Concurrence) {
        // nothing harvested anywhere on the scan that beat zero ties
        res.delta_omega_star = 0.0;
        res.at_lower_bound = true;
        res.flat_objective = true;
    }
    return res;
}

std::vector<GapCurveRow> optimal_gap_curve(double omega_a, double separation,
                                           const std::vector<double>& dz_grid,
                                           Alignment alignment, Quantity quantity)
{
    for (std::size_t i = 1; i < dz_grid.size(); ++i)
        if (!(dz_grid[i] > dz_grid[i - 1]))
            throw std::invalid_argument("optimal_gap_curve: dz grid must ascend");
    std::vector<GapCurveRow> rows(dz_grid.size());
    // order-preserving parallel map; failures stay in their row
    parallel_for(dz_grid.size(), 0, [&](std::size_t i) {
        rows[i].dz = dz_grid[i];
        try {
            Geometry geom{alignment, separation, dz_grid[i]};
            rows[i].result = optimal_gap(omega_a, geom, quantity);
        } catch (const std::exception& e) {
            rows[i].error = e.what();
        }
    });
    return rows;
}

void SweepSpec::validate() const
{
    if (!(lo < hi))
        throw std::invalid_argument("SweepSpec: lo must be < hi");
    if (n_points < 2)
        throw std::invalid_argument("SweepSpec: n_points must be >= 2");
    if (spacing == GridSpacing::Log && !(lo > 0.0))
        throw std::invalid_argument("SweepSpec: log spacing needs lo > 0");
    if (quantities.empty())
        throw std::invalid_argument("SweepSpec: no quantities requested");
    fixed_pair.validate();
    fixed_geometry.validate();
}

std::vector<SweepRow> sweep(const SweepSpec& spec)
{
    spec.validate();
    std::vector<SweepRow> rows(spec.n_points);
    parallel_for(std::size_t(spec.n_points), 0, [&](std::size_t i) {
        double t = double(i) / (spec.n_points - 1);
        double x = spec.spacing == GridSpacing::Linear
                       ? spec.lo + t * (spec.hi - spec.lo)
                       : spec.lo * std::pow(spec.hi / spec.lo, t);
        SweepRow& row = rows[i];
        row.x = x;
        DetectorPair pair = spec.fixed_pair;
        Geometry geom = spec.fixed_geometry;
        try {
            switch (spec.variable) {
            case SweepVariable::Separation: geom.separation = x; break;
            case SweepVariable::Dz: geom.dz = x; break;
            case SweepVariable::DeltaOmega: pair.omega_b = pair.omega_a + x; break;
            case SweepVariable::OmegaA: {
                double d_omega = pair.delta_omega();
                pair.omega_a = x;
                pair.omega_b = x + d_omega;
                break;
            }
            }
            TwoDetectorState st = evaluate(pair, geom);
            row.values.reserve(spec.quantities.size());
            for (Quantity q : spec.quantities)
                row.values.push_back(quantity_value(q, st));
        } catch (const std::exception& e) {
            row.values.assign(spec.quantities.size(),
                              std::numeric_limits<double>::quiet_NaN());
            row.error = e.what();
        }
    });
    return rows;
}

} // namespace harvestlab
