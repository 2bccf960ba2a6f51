#ifndef HARVESTLAB_PV_ORACLE_HPP
#define HARVESTLAB_PV_ORACLE_HPP

#include "harvestlab/detector_model.hpp"

#include <vector>

namespace harvestlab {

// Brute-force evaluation of P_D, C, X straight from the time-domain
// integrals with the image Wightman function: the Gaussian u-integral is
// taken analytically, what remains is a single s-integral with simple poles
// at the light-cone crossings.  Poles are handled by symmetric
// pole-subtraction principal values plus the closed-form delta terms; the
// double pole of the direct P_D term is regularized by an epsilon
// prescription and Richardson-extrapolated to epsilon -> 0.

struct QuadratureSpec {
    // the engine runs in long double, so the defaults sit below double
    // roundoff: several certified values are cancellation-suppressed ten
    // orders under the integrand scale and need the headroom
    double abs_tol = 1e-16;
    double rel_tol = 1e-12;
    double pv_window = 0.5; // half-width of the symmetric pole window
    std::vector<double> eps_ladder = {0.16, 0.08, 0.04, 0.02,
                                      0.01, 0.005, 0.0025, 0.00125};
    int max_subdivisions = 20000;

    void validate() const;
};

// Pole bookkeeping for one correlation integrand: the direct term sits at
// s = |x_A - x_B| and the image term at the reflected separation, entering
// with opposite sign (direct minus image).
struct WightmanSpec {
    double spatial_gap_direct = 0.0;
    double spatial_gap_image = 0.0;

    static WightmanSpec for_geometry(const Geometry& geom);
    void validate(bool allow_on_boundary = false) const;
};

struct OracleValue {
    Complex value{0.0, 0.0};
    double error_estimate = 0.0;
};

// Correlation term C per lambda^2 (purely real; the imaginary part of the
// returned value is identically zero by the cosine reduction).
Complex pv_correlation_c(const DetectorPair& pair, const Geometry& geom,
                         const QuadratureSpec& quad);

// Correlation term X per lambda^2.
Complex pv_correlation_x(const DetectorPair& pair, const Geometry& geom,
                         const QuadratureSpec& quad);

// Transition probability per lambda^2: image part by PV + delta term,
// direct part evaluated on the epsilon ladder and extrapolated.
double eps_transition_probability(double gap, double dz, const QuadratureSpec& quad);

namespace oracle_detail {
// Raw-gap entry points (no pair-ordering convention) used by symmetry tests.
OracleValue correlation_c_raw(double omega_a, double omega_b,
                              const WightmanSpec& w, bool boundaryless,
                              const QuadratureSpec& quad);
OracleValue correlation_x_raw(double omega_a, double omega_b,
                              const WightmanSpec& w, bool boundaryless,
                              const QuadratureSpec& quad);
// Direct (flat-space) part alone, extrapolated; exposed for ladder tests.
OracleValue direct_probability_eps(double gap, const QuadratureSpec& quad);
// Image part alone.
OracleValue image_probability(double gap, double dz, const QuadratureSpec& quad);
} // namespace oracle_detail

// ---- certification ----

struct CertificationPoint {
    double omega_a, delta_omega, separation, dz;
    Alignment alignment;
};

struct CertificationRow {
    CertificationPoint point{};
    double err_p_a = 0.0, err_p_b = 0.0, err_c = 0.0, err_x = 0.0;
    double worst = 0.0;
    bool pass = false;
};

// Product of the published spans: omega_a in {0,.1,.5,1.1,2} x
// delta_omega in {0,.08,.5,1} x L in {.1,.5,1.5,5} x dz in {.05,.5,1,3,10},
// parallel and vertical.
std::vector<CertificationPoint> default_certification_grid();

// Relative disagreement of every closed-form entry against the oracle,
// |a - b| / max(|a|, |b|).  threads = 0 picks HARVESTLAB_THREADS / hardware.
std::vector<CertificationRow> run_certification(
    const std::vector<CertificationPoint>& grid, const QuadratureSpec& quad,
    double rel_tol, unsigned threads = 0);

} // namespace harvestlab

#endif
