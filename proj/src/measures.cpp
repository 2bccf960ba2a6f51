#include "harvestlab/measures.hpp"

#include <algorithm>
#include <cmath>

namespace harvestlab {

namespace {

double xlogx(double v)
{
    return v > 0.0 ? v * std::log(v) : 0.0;
}

} // namespace

double concurrence(const TwoDetectorState& state)
{
    double gap = std::abs(state.x) - std::sqrt(state.p_a * state.p_b);
    return gap > 0.0 ? 2.0 * gap : 0.0;
}

double mutual_information(const TwoDetectorState& state)
{
    double pa = state.p_a, pb = state.p_b;
    if (pa <= 0.0 || pb <= 0.0)
        return 0.0;
    double cmag = std::abs(state.c);
    if (cmag == 0.0)
        return 0.0;

    double s = pa + pb;
    double p = 0.5 * s;
    double d = 0.5 * std::abs(pa - pb);

    if (cmag < 1e-8 * s) {
        // MI ~ |c|^2 ln((p+d)/(p-d)) / (2d), relative error O(|c|^2/(p-d)^2);
        // p - d is exactly min(p_a, p_b), which never cancels
        double pmin = std::min(pa, pb);
        double q = d < 1e-6 * p ? (1.0 + d * d / (3.0 * p * p)) / p
                                : std::log1p(2.0 * d / pmin) / (2.0 * d);
        return cmag * cmag * q;
    }

    // The ln(s) contributions cancel through L+ + L- = p_a + p_b; working
    // with the s-normalized spectrum performs that cancellation exactly, so
    // coupling rescales (s -> lambda^2 s) factor out of the result.
    double pan = pa / s, pbn = pb / s;
    double rn = std::hypot(0.5 * (pan - pbn), cmag / s);
    double lpn = 0.5 + rn;
    double lmn = std::max(0.0, 0.5 - rn);
    double mi = s * (xlogx(lpn) + xlogx(lmn) - xlogx(pan) - xlogx(pbn));
    return mi > 0.0 ? mi : 0.0;
}

CorrelationReport make_report(const TwoDetectorState& state)
{
    CorrelationReport rep;
    double p = 0.5 * (state.p_a + state.p_b);
    double r = std::hypot(0.5 * (state.p_a - state.p_b), std::abs(state.c));
    rep.l_plus = p + r;
    rep.l_minus = std::max(0.0, p - r);
    rep.concurrence = concurrence(state);
    rep.mutual_info = mutual_information(state);
    rep.perturbative_ok = state.p_a + state.p_b < 0.1;
    return rep;
}

CorrelationReport rescale_report(const CorrelationReport& report, double lambda)
{
    if (!(lambda > 0.0))
        throw std::invalid_argument("rescale_report: lambda must be > 0");
    double l2 = lambda * lambda;
    CorrelationReport out = report;
    out.concurrence *= l2;
    out.mutual_info *= l2;
    out.l_plus *= l2;
    out.l_minus *= l2;
    out.perturbative_ok = out.l_plus + out.l_minus < 0.1;
    return out;
}

} // namespace harvestlab
