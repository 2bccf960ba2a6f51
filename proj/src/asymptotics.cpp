#include "harvestlab/asymptotics.hpp"

#include <cmath>
#include <string>

namespace harvestlab {

namespace {

// Nominal "a << b" means a <= b/2; up to a <= b is a warning, beyond throws.
class OrderingCheck {
public:
    void require(double small, double big, const char* label)
    {
        if (!(big > 0.0) || small > big)
            throw std::domain_error(std::string("asymptotic regime violated: ") + label);
        if (small > 0.5 * big)
            warning_ = true;
    }
    bool warning() const { return warning_; }

private:
    bool warning_ = false;
};

[[noreturn]] void no_printed_form(const char* which)
{
    throw std::domain_error(std::string(which) +
                            ": no closed form in this regime combination");
}

} // namespace

double approx_probability_near(double gap, double dz)
{
    return dz * dz / (2.0 * pi) * (1.0 / 3.0 - 0.5 * sqrt_pi * gap);
}

ApproxResult approx_correlation_x_near(const AsymptoticPoint& p, SepClass sep)
{
    OrderingCheck chk;
    chk.require(p.dz, 1.0, "dz << sigma");
    chk.require(p.omega, 1.0, "omega << 1/sigma");
    double dz2 = p.dz * p.dz;
    double L = p.separation;
    double om2 = p.omega * p.omega;
    double v;
    if (sep == SepClass::SmallL) {
        chk.require(L, 1.0, "L << sigma");
        v = dz2 * (1.0 - om2) / (2.0 * L * L * L * sqrt_pi);
    } else {
        chk.require(1.0, L, "L >> sigma");
        v = 2.0 * dz2 * (1.0 - om2) / (L * L * L * L * pi);
    }
    return {v, chk.warning()};
}

ApproxResult approx_correlation_c_near(const AsymptoticPoint& p, SepClass sep)
{
    OrderingCheck chk;
    chk.require(p.dz, 1.0, "dz << sigma");
    chk.require(p.omega, 1.0, "omega << 1/sigma");
    double dz2 = p.dz * p.dz;
    double L = p.separation;
    double v;
    if (sep == SepClass::SmallL) {
        chk.require(L, 1.0, "L << sigma");
        v = dz2 / (2.0 * pi) * (1.0 / 3.0 - L * L / 15.0 - 0.5 * sqrt_pi * p.omega);
    } else {
        chk.require(1.0, L, "L >> sigma");
        v = dz2 / pi * (2.0 / (L * L * L * L)
                        - 0.25 * sqrt_pi * p.omega * std::exp(-0.25 * L * L));
    }
    return {v, chk.warning()};
}

ApproxResult approx_concurrence(const Regime& regime, Alignment alignment,
                                const AsymptoticPoint& p)
{
    if (alignment == Alignment::Boundaryless)
        no_printed_form("approx_concurrence");
    OrderingCheck chk;
    double L = p.separation, dz = p.dz, om = p.omega;
    double v;

    if (alignment == Alignment::Parallel) {
        if (regime.gap_class == GapClass::LargeGap) {
            if (regime.zone != Zone::NearBoundary || regime.sep_class != SepClass::SmallL)
                no_printed_form("approx_concurrence");
            chk.require(1.0, om, "omega >> 1/sigma");
            chk.require(dz, 1.0, "dz << sigma");
            chk.require(L, 1.0, "L << sigma");
            v = std::exp(-om * om) * dz * dz / (L * L * L * sqrt_pi);
        } else if (regime.zone == Zone::NearBoundary) {
            chk.require(om, 1.0, "omega << 1/sigma");
            chk.require(dz, 1.0, "dz << sigma");
            if (regime.sep_class == SepClass::SmallL) {
                chk.require(dz, L, "dz << L");
                chk.require(L, 1.0, "L << sigma");
                v = dz * dz / sqrt_pi
                    * (1.0 / (L * L * L) + 0.25 / L - 1.0 / (3.0 * sqrt_pi) + 0.5 * om);
            } else {
                chk.require(1.0, L, "L >> sigma");
                v = 0.0;
            }
        } else { // far zone
            chk.require(om, 1.0, "omega << 1/sigma");
            chk.require(1.0, dz, "dz >> sigma");
            if (regime.sep_class == SepClass::SmallL) {
                chk.require(L, 1.0, "L << sigma");
                v = 0.5 / sqrt_pi
                    * (1.0 / L - inv_sqrt_pi + 0.5 * inv_sqrt_pi / (dz * dz) + om);
            } else {
                chk.require(1.0, L, "L >> sigma");
                chk.require(L, dz, "L << dz");
                v = 0.0;
            }
        }
    } else { // vertical
        if (regime.sep_class == SepClass::LargeL) {
            chk.require(1.0, L, "L >> sigma");
            v = 0.0;
        } else if (regime.gap_class == GapClass::LargeGap) {
            if (regime.zone != Zone::NearBoundary)
                no_printed_form("approx_concurrence");
            chk.require(1.0, om, "omega >> 1/sigma");
            chk.require(dz, 1.0, "dz << sigma");
            chk.require(L, 1.0, "L << sigma");
            v = std::exp(-om * om) * dz / (L * L * sqrt_pi);
        } else if (regime.zone == Zone::NearBoundary) {
            chk.require(om, 1.0, "omega << 1/sigma");
            chk.require(dz, L, "dz << L");
            chk.require(L, 1.0, "L << sigma");
            v = dz / sqrt_pi
                * (1.0 / (L * L) + 0.25 - L / (3.0 * sqrt_pi) + 0.5 * L * om);
        } else {
            chk.require(om, 1.0, "omega << 1/sigma");
            chk.require(1.0, dz, "dz >> sigma");
            chk.require(L, 1.0, "L << sigma");
            v = 0.5 / sqrt_pi
                * (1.0 / L - inv_sqrt_pi + 0.5 * inv_sqrt_pi / (dz * dz) + om);
        }
    }
    return {v, chk.warning()};
}

ApproxResult approx_mutual_info(const Regime& regime, Alignment alignment,
                                const AsymptoticPoint& p)
{
    if (alignment == Alignment::Boundaryless)
        no_printed_form("approx_mutual_info");
    OrderingCheck chk;
    double L = p.separation, dz = p.dz, om = p.omega;
    double dz2 = dz * dz;
    double v;

    if (regime.gap_class == GapClass::LargeGap) {
        if (regime.zone != Zone::NearBoundary || regime.sep_class != SepClass::SmallL)
            no_printed_form("approx_mutual_info");
        chk.require(1.0, om, "omega >> 1/sigma");
        chk.require(dz, 1.0, "dz << sigma");
        chk.require(L, 1.0, "L << sigma");
        double om2 = om * om;
        if (alignment == Alignment::Parallel) {
            v = std::exp(-om2) * dz2 / (8.0 * pi * om2 * om2 * om2)
                * (2.0 * om2 * ln2 - L * L * std::log(om));
        } else {
            chk.require(dz, L, "dz << L");
            v = std::exp(-om2) * dz2 / (4.0 * pi * om2 * om2) * std::log(L / dz);
        }
        return {v, chk.warning()};
    }

    chk.require(om, 1.0, "omega << 1/sigma");
    if (regime.zone == Zone::FarBoundary) {
        // identical in both alignments
        chk.require(1.0, dz, "dz >> sigma");
        if (regime.sep_class == SepClass::SmallL) {
            chk.require(L, 1.0, "L << sigma");
            v = 0.5 / pi
                * (ln2 + L * L / 6.0 * std::log(L) - 0.5 * ln2 / dz2
                   - sqrt_pi * om * ln2);
        } else {
            chk.require(1.0, L, "L >> sigma");
            chk.require(L, dz, "L << dz");
            v = 1.0 / (L * L * pi)
                * (1.0 / (L * L) - 0.5 / dz2 + sqrt_pi * om / (L * L));
        }
        return {v, chk.warning()};
    }

    chk.require(dz, 1.0, "dz << sigma");
    if (alignment == Alignment::Parallel) {
        if (regime.sep_class == SepClass::SmallL) {
            chk.require(dz, L, "dz << L");
            chk.require(L, 1.0, "L << sigma");
            v = ln2 / 3.0 * dz2 / pi
                + L * L * dz2 / (15.0 * pi) * std::log(L)
                - 0.5 * ln2 * om * dz2 / sqrt_pi;
        } else {
            chk.require(1.0, L, "L >> sigma");
            double L4 = L * L * L * L;
            v = 12.0 * dz2 / (L4 * L4 * pi) * (2.0 + 3.0 * sqrt_pi * om);
        }
    } else { // vertical
        if (regime.sep_class == SepClass::SmallL) {
            chk.require(dz, L, "dz << L");
            chk.require(L, 1.0, "L << sigma");
            v = (2.0 - 3.0 * sqrt_pi * om) * dz2 / (6.0 * pi) * std::log(L / dz);
        } else {
            chk.require(1.0, L, "L >> sigma");
            double L6 = L * L * L * L * L * L;
            v = 32.0 * (1.0 + sqrt_pi * om) * dz2 / (L6 * pi) * std::log(1.0 / dz);
        }
    }
    return {v, chk.warning()};
}

} // namespace harvestlab
