#include "harvestlab/figures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace harvestlab {

namespace {

constexpr int kPoints = 256;

std::string fmt(const char* pattern, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, v);
    return buf;
}

std::vector<double> linspace(double lo, double hi, int n)
{
    std::vector<double> xs(n);
    for (int i = 0; i < n; ++i)
        xs[i] = lo + (hi - lo) * double(i) / (n - 1);
    return xs;
}

void put_meta(Table& t, const std::string& k, double v)
{
    t.metadata.emplace_back(k, fmt("%.6g", v));
}

struct CurveSpec {
    double omega_a;
    std::vector<double> ratios; // delta_omega / omega_a per curve
};

Quantity measure_of(char which)
{
    return which == 'C' ? Quantity::Concurrence : Quantity::MutualInfo;
}

// family 1: measure vs L or dz for three gap-difference ratios
Table sweep_family(char measure, SweepVariable var, double lo, double hi,
                   const CurveSpec& cs, double fixed_other, bool dashed_bl)
{
    Table t;
    t.metadata.emplace_back("abscissa", var == SweepVariable::Separation ? "L/sigma" : "dz/sigma");
    put_meta(t, "omega_a", cs.omega_a);
    if (var == SweepVariable::Separation)
        put_meta(t, "dz", fixed_other);
    else
        put_meta(t, "L", fixed_other);
    t.columns.push_back(var == SweepVariable::Separation ? "L" : "dz");

    std::vector<std::vector<SweepRow>> curves;
    for (double r : cs.ratios) {
        SweepSpec spec;
        spec.variable = var;
        spec.lo = lo;
        spec.hi = hi;
        spec.n_points = kPoints;
        spec.fixed_pair = {cs.omega_a, cs.omega_a * (1.0 + r), 1.0, 1.0};
        spec.fixed_geometry.alignment = Alignment::Parallel;
        if (var == SweepVariable::Separation)
            spec.fixed_geometry.dz = fixed_other;
        else
            spec.fixed_geometry.separation = fixed_other;
        spec.quantities = {measure_of(measure)};
        curves.push_back(sweep(spec));
        t.columns.push_back("ratio=" + fmt("%.2f", r));
    }
    std::vector<double> bl;
    if (dashed_bl) {
        for (double r : cs.ratios) {
            DetectorPair pair{cs.omega_a, cs.omega_a * (1.0 + r), 1.0, 1.0};
            Geometry geom{Alignment::Boundaryless, fixed_other, 0.0};
            TwoDetectorState st = evaluate(pair, geom);
            bl.push_back(quantity_value(measure_of(measure), st));
            t.columns.push_back("ratio=" + fmt("%.2f", r) + "_boundaryless");
        }
    }
    for (int i = 0; i < kPoints; ++i) {
        std::vector<double> row{curves[0][i].x};
        for (auto& c : curves)
            row.push_back(c[i].values[0]);
        for (double v : bl)
            row.push_back(v);
        t.rows.push_back(std::move(row));
    }
    return t;
}

// family 2: measure vs gap-difference ratio for a few dz values
Table ratio_family(char measure, double omega_a, double separation,
                   const std::vector<double>& dzs, double ratio_hi)
{
    Table t;
    t.metadata.emplace_back("abscissa", "delta_omega/omega_a");
    put_meta(t, "omega_a", omega_a);
    put_meta(t, "L", separation);
    t.columns.push_back("ratio");
    std::vector<std::vector<SweepRow>> curves;
    for (double dz : dzs) {
        SweepSpec spec;
        spec.variable = SweepVariable::DeltaOmega;
        spec.lo = 0.0;
        spec.hi = ratio_hi * omega_a;
        spec.n_points = kPoints;
        spec.fixed_pair = {omega_a, omega_a, 1.0, 1.0};
        spec.fixed_geometry = {Alignment::Parallel, separation, dz};
        spec.quantities = {measure_of(measure)};
        curves.push_back(sweep(spec));
        t.columns.push_back("dz=" + fmt("%.2f", dz));
    }
    // flat-space dashed curve
    {
        SweepSpec spec;
        spec.variable = SweepVariable::DeltaOmega;
        spec.lo = 0.0;
        spec.hi = ratio_hi * omega_a;
        spec.n_points = kPoints;
        spec.fixed_pair = {omega_a, omega_a, 1.0, 1.0};
        spec.fixed_geometry = {Alignment::Boundaryless, separation, 0.0};
        spec.quantities = {measure_of(measure)};
        curves.push_back(sweep(spec));
        t.columns.push_back("boundaryless");
    }
    for (int i = 0; i < kPoints; ++i) {
        std::vector<double> row{curves[0][i].x / omega_a};
        for (auto& c : curves)
            row.push_back(c[i].values[0]);
        t.rows.push_back(std::move(row));
    }
    return t;
}

// family 3: optimal gap difference vs dz for several separations
Table gap_curve_family(char measure, Alignment alignment, double omega_a,
                       const std::vector<double>& seps)
{
    Table t;
    t.metadata.emplace_back("abscissa", "dz/sigma");
    t.metadata.emplace_back("ordinate", "delta_omega_star/omega_a");
    put_meta(t, "omega_a", omega_a);
    t.metadata.emplace_back("alignment",
                            alignment == Alignment::Parallel ? "parallel" : "vertical");
    t.columns.push_back("dz");
    std::vector<double> dz_grid = linspace(0.25, 3.0, kPoints);
    std::vector<std::vector<GapCurveRow>> curves;
    for (double L : seps) {
        curves.push_back(optimal_gap_curve(omega_a, L, dz_grid, alignment,
                                           measure_of(measure)));
        t.columns.push_back("L=" + fmt("%.2f", L));
    }
    for (int i = 0; i < kPoints; ++i) {
        std::vector<double> row{dz_grid[i]};
        for (auto& c : curves)
            row.push_back(c[i].error ? std::nan("") :
                          c[i].result.delta_omega_star / omega_a);
        t.rows.push_back(std::move(row));
    }
    return t;
}

// family 4: vertical-minus-parallel difference vs dz
Table diff_family(char measure, double omega_a, double separation,
                  const std::vector<double>& ratios)
{
    Table t;
    t.metadata.emplace_back("abscissa", "dz/sigma");
    t.metadata.emplace_back("ordinate",
                            measure == 'C' ? "concurrence_vertical_minus_parallel"
                                           : "mutual_info_vertical_minus_parallel");
    put_meta(t, "omega_a", omega_a);
    put_meta(t, "L", separation);
    t.columns.push_back("dz");
    std::vector<double> dz_grid = linspace(0.05, 3.0, kPoints);
    for (double r : ratios)
        t.columns.push_back("ratio=" + fmt("%.2f", r));
    for (double dz : dz_grid) {
        std::vector<double> row{dz};
        for (double r : ratios) {
            DetectorPair pair{omega_a, omega_a * (1.0 + r), 1.0, 1.0};
            TwoDetectorState v = evaluate(pair, {Alignment::Vertical, separation, dz});
            TwoDetectorState p = evaluate(pair, {Alignment::Parallel, separation, dz});
            Quantity q = measure_of(measure);
            row.push_back(quantity_value(q, v) - quantity_value(q, p));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

const CurveSpec kSmallGap{0.10, {0.0, 0.80, 10.0}};
const CurveSpec kLargeGap{1.10, {0.0, 0.50, 1.10}};

} // namespace

std::vector<std::string> figure_ids()
{
    return {"fig2a", "fig2b", "fig3a", "fig3b", "fig4a", "fig4b", "fig5",
            "fig6a", "fig6b", "fig7a", "fig7b", "fig8a", "fig8b", "fig9",
            "fig11a", "fig11b", "fig12a", "fig12b", "fig13", "fig14"};
}

bool is_figure_id(const std::string& id)
{
    auto ids = figure_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

Table make_figure(const std::string& id)
{
    Table t;
    if (id == "fig2a")
        t = sweep_family('C', SweepVariable::Separation, 0.05, 5.0, kSmallGap, 1.0, false);
    else if (id == "fig2b")
        t = sweep_family('C', SweepVariable::Separation, 0.05, 5.0, kLargeGap, 1.0, false);
    else if (id == "fig3a")
        t = sweep_family('C', SweepVariable::Dz, 0.0, 50.0, kSmallGap, 0.5, true);
    else if (id == "fig3b")
        t = sweep_family('C', SweepVariable::Dz, 0.0, 50.0, kLargeGap, 0.5, true);
    else if (id == "fig4a")
        t = ratio_family('C', 0.10, 0.10, {0.5, 1.0, 2.0}, 15.0);
    else if (id == "fig4b")
        t = ratio_family('C', 0.10, 1.50, {0.5, 1.0, 2.0}, 15.0);
    else if (id == "fig5")
        t = gap_curve_family('C', Alignment::Parallel, 0.10, {0.1, 3.0, 4.0, 5.0});
    else if (id == "fig6a")
        t = sweep_family('I', SweepVariable::Separation, 0.05, 10.0, kSmallGap, 1.0, false);
    else if (id == "fig6b")
        t = sweep_family('I', SweepVariable::Separation, 0.05, 10.0, kLargeGap, 1.0, false);
    else if (id == "fig7a")
        t = sweep_family('I', SweepVariable::Dz, 0.05, 50.0, kSmallGap, 0.5, true);
    else if (id == "fig7b")
        t = sweep_family('I', SweepVariable::Dz, 0.05, 50.0, kLargeGap, 0.5, true);
    else if (id == "fig8a")
        t = ratio_family('I', 0.10, 0.10, {0.5, 1.0, 2.0}, 15.0);
    else if (id == "fig8b")
        t = ratio_family('I', 0.10, 5.00, {0.5, 1.0, 2.0}, 15.0);
    else if (id == "fig9")
        t = gap_curve_family('I', Alignment::Parallel, 0.10, {0.1, 3.0, 5.0, 7.0});
    else if (id == "fig11a")
        t = diff_family('C', 0.50, 0.50, {0.0, 0.80, 3.0});
    else if (id == "fig11b")
        t = diff_family('C', 0.50, 3.00, {0.0, 0.80, 3.0});
    else if (id == "fig12a")
        t = diff_family('I', 0.50, 0.50, {0.0, 0.80, 3.0});
    else if (id == "fig12b")
        t = diff_family('I', 0.50, 3.00, {0.0, 0.80, 3.0});
    else if (id == "fig13")
        t = gap_curve_family('C', Alignment::Vertical, 0.10, {0.1, 3.0, 4.0, 5.0});
    else if (id == "fig14")
        t = gap_curve_family('I', Alignment::Vertical, 0.10, {0.1, 3.0, 5.0, 7.0});
    else {
        std::string msg = "unknown figure id '" + id + "'; valid ids:";
        for (const auto& v : figure_ids())
            msg += " " + v;
        throw std::invalid_argument(msg);
    }
    t.metadata.emplace_back("figure", id);
    return t;
}

} // namespace harvestlab
