#include "harvestlab/pv_oracle.hpp"
#include "harvestlab/parallel.hpp"
#include "harvestlab/quadrature.hpp"

#include <cmath>

namespace harvestlab {

void QuadratureSpec::validate() const
{
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || !(pv_window > 0.0))
        throw std::invalid_argument("QuadratureSpec: tolerances must be > 0");
    if (eps_ladder.size() < 3)
        throw std::invalid_argument("QuadratureSpec: eps ladder needs >= 3 rungs");
    for (std::size_t i = 1; i < eps_ladder.size(); ++i)
        if (!(eps_ladder[i] < eps_ladder[i - 1]) || !(eps_ladder[i] > 0.0))
            throw std::invalid_argument(
                "QuadratureSpec: eps ladder must be strictly decreasing and positive");
    if (max_subdivisions < 16)
        throw std::invalid_argument("QuadratureSpec: max_subdivisions too small");
}

WightmanSpec WightmanSpec::for_geometry(const Geometry& geom)
{
    WightmanSpec w;
    w.spatial_gap_direct = geom.separation;
    switch (geom.alignment) {
    case Alignment::Parallel:
        w.spatial_gap_image = std::hypot(geom.separation, 2.0 * geom.dz);
        break;
    case Alignment::Vertical:
        w.spatial_gap_image = geom.separation + 2.0 * geom.dz;
        break;
    case Alignment::Boundaryless:
        w.spatial_gap_image = 0.0;
        break;
    }
    return w;
}

void WightmanSpec::validate(bool allow_on_boundary) const
{
    if (!(spatial_gap_direct > 0.0))
        throw std::domain_error("WightmanSpec: coincident detectors");
    if (!allow_on_boundary && spatial_gap_image > 0.0 &&
        spatial_gap_image < spatial_gap_direct)
        throw std::domain_error("WightmanSpec: image gap below direct gap");
}

namespace {

using LD = long double;
constexpr LD kPiL = 3.14159265358979323846264338327950288L;
constexpr LD kSqrtPiL = 1.77245385090551602729816748334114518L;
constexpr LD kTail = 14.0L; // exp(-s^2/4) below 3e-22 past here

// PV int_0^smax exp(-s^2/4) cos(beta s) / (s^2 - d^2) ds by symmetric
// pole subtraction: over [d-w, d+w] the integrand minus its Laurent part
// h(d)/(2d (s-d)) integrates smoothly while the Laurent part integrates to
// zero; the delta contributions are added in closed form by the callers.
IntegralResult pv_gauss_cos_half(LD beta, LD d, const QuadratureSpec& q)
{
    auto h = [beta](LD s) { return std::exp(-0.25L * s * s) * std::cos(beta * s); };
    auto hp = [beta](LD s) {
        return std::exp(-0.25L * s * s) *
               (-0.5L * s * std::cos(beta * s) - beta * std::sin(beta * s));
    };
    auto plain = [&, d](LD s) { return h(s) / ((s - d) * (s + d)); };

    LD abs_tol = q.abs_tol, rel_tol = q.rel_tol;

    // pole far beyond any Gaussian support: integrand smooth where nonzero
    if (d >= kTail + 41.0L)
        return integrate_adaptive(plain, 0.0L, kTail, abs_tol, rel_tol,
                                  q.max_subdivisions);

    LD w = std::min<LD>(q.pv_window, 0.45L * d);
    LD smax = std::max(kTail, d + std::max(1.0L, 3.0L * w));
    LD hd = h(d);
    LD residue = hd / (2.0L * d);
    auto window = [&, d](LD s) {
        if (std::abs(s - d) < 1e-12L * std::max(1.0L, d))
            return hp(d) / (2.0L * d) - hd / (4.0L * d * d);
        return (h(s) / (s + d) - residue) / (s - d);
    };

    IntegralResult left =
        integrate_adaptive(plain, 0.0L, d - w, abs_tol, rel_tol, q.max_subdivisions);
    IntegralResult mid =
        integrate_adaptive(window, d - w, d + w, abs_tol, rel_tol, q.max_subdivisions);
    IntegralResult right =
        integrate_adaptive(plain, d + w, smax, abs_tol, rel_tol, q.max_subdivisions);
    return {left.value + mid.value + right.value,
            left.error + mid.error + right.error,
            left.evaluations + mid.evaluations + right.evaluations};
}

// Full-line PV plus the Sokhotski delta term for the even integrand
// exp(-s^2/4) cos(beta s): J(beta,d) = 2 PV + (pi/d) exp(-d^2/4) sin(beta d)
IntegralResult sokhotski_line(LD beta, LD d, const QuadratureSpec& q)
{
    IntegralResult pv = pv_gauss_cos_half(beta, d, q);
    LD delta_term = kPiL / d * std::exp(-0.25L * d * d) * std::sin(beta * d);
    return {2.0L * pv.value + delta_term, 2.0L * pv.error, pv.evaluations};
}

double rel_diff(double a, double b)
{
    double scale = std::max(std::abs(a), std::abs(b));
    if (scale < 1e-280)
        return 0.0;
    return std::abs(a - b) / scale;
}

double rel_diff(Complex a, Complex b)
{
    double scale = std::max(std::abs(a), std::abs(b));
    if (scale < 1e-280)
        return 0.0;
    return std::abs(a - b) / scale;
}

struct DirectResult {
    LD value = 0.0L;
    LD error = 0.0L;
};

// Direct flat-space term: after one integration by parts the double pole
// reads I(eps) = int F'(s)/(s - i eps) ds with F = exp(-s^2/4) exp(-i g s),
// folded onto the half line by F'(-s) = -conj(F'(s)).  I(eps) is entire in
// eps (its Laplace representation is int t exp(-(t+g)^2) exp(-eps t) dt up
// to constants), so the ladder extrapolates polynomially.
DirectResult direct_eps_ladder(LD gap, const QuadratureSpec& quad)
{
    auto eval = [&](LD eps) {
        auto integrand = [gap, eps](LD s) {
            LD damp = std::exp(-0.25L * s * s);
            LD c = std::cos(gap * s), sn = std::sin(gap * s);
            LD re_fp = damp * (-0.5L * s * c - gap * sn);
            LD im_fp = damp * (0.5L * s * sn - gap * c);
            return (re_fp * s - im_fp * eps) / (s * s + eps * eps);
        };
        IntegralResult r = integrate_adaptive(integrand, 0.0L, kTail, quad.abs_tol,
                                              quad.rel_tol, quad.max_subdivisions);
        return std::pair<LD, LD>(2.0L * r.value, 2.0L * r.error);
    };

    const std::vector<double>& eps = quad.eps_ladder;
    std::size_t n = eps.size();
    std::vector<LD> v(n);
    LD quad_err = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
        auto [val, err] = eval((LD)eps[i]);
        v[i] = val;
        quad_err = std::max(quad_err, err);
    }

    // Neville tableau evaluated at eps = 0; diagonal differences provide
    // the error estimate and the divergence guard.
    LD diag_prev = v[0], diff_prev = 0.0L, diff_last = 0.0L;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = n - 1; i >= j; --i)
            v[i] = ((LD)eps[i] * v[i - 1] - (LD)eps[i - j] * v[i]) /
                   ((LD)eps[i] - (LD)eps[i - j]);
        diff_prev = diff_last;
        diff_last = std::abs(v[n - 1] - diag_prev);
        diag_prev = v[n - 1];
    }
    LD tol = std::max<LD>(quad.abs_tol, quad.rel_tol * std::abs(v[n - 1]));
    if (diff_last > 10.0L * std::max(diff_prev, tol) && diff_last > 100.0L * tol)
        throw numerical_error("direct_probability_eps: extrapolation unstable",
                              double(diff_last));
    return {v[n - 1], diff_last + quad_err};
}

} // namespace

namespace oracle_detail {

OracleValue correlation_c_raw(double omega_a, double omega_b,
                              const WightmanSpec& w, bool boundaryless,
                              const QuadratureSpec& quad)
{
    LD beta = 0.5L * ((LD)omega_a + (LD)omega_b);
    LD d_omega = (LD)omega_b - (LD)omega_a;
    IntegralResult j0 = sokhotski_line(beta, (LD)w.spatial_gap_direct, quad);
    LD value = j0.value;
    LD err = j0.error;
    if (!boundaryless) {
        IntegralResult j1 = sokhotski_line(beta, (LD)w.spatial_gap_image, quad);
        value -= j1.value;
        err += j1.error;
    }
    LD pref = -std::exp(-0.25L * d_omega * d_omega) / (4.0L * kPiL * kSqrtPiL);
    return {Complex(double(pref * value), 0.0), double(std::abs(pref) * err)};
}

OracleValue correlation_x_raw(double omega_a, double omega_b,
                              const WightmanSpec& w, bool boundaryless,
                              const QuadratureSpec& quad)
{
    LD gamma = 0.5L * std::abs((LD)omega_b - (LD)omega_a);
    LD sum = (LD)omega_a + (LD)omega_b;
    auto jx = [&](LD d) {
        IntegralResult pv = pv_gauss_cos_half(gamma, d, quad);
        LD delta_im =
            -kPiL * std::exp(-0.25L * d * d) * std::cos(gamma * d) / (2.0L * d);
        return std::pair<std::complex<LD>, LD>({pv.value, delta_im}, pv.error);
    };
    auto [v0, e0] = jx((LD)w.spatial_gap_direct);
    std::complex<LD> value = v0;
    LD err = e0;
    if (!boundaryless) {
        auto [v1, e1] = jx((LD)w.spatial_gap_image);
        value -= v1;
        err += e1;
    }
    LD pref = std::exp(-0.25L * sum * sum) / (2.0L * kPiL * kSqrtPiL);
    value *= pref;
    return {Complex(double(value.real()), double(value.imag())),
            double(pref * err)};
}

OracleValue direct_probability_eps(double gap, const QuadratureSpec& quad)
{
    DirectResult d = direct_eps_ladder((LD)gap, quad);
    LD pref = -1.0L / (4.0L * kPiL * kSqrtPiL);
    return {Complex(double(pref * d.value), 0.0),
            double(std::abs(pref) * d.error)};
}

OracleValue image_probability(double gap, double dz, const QuadratureSpec& quad)
{
    IntegralResult j = sokhotski_line((LD)gap, 2.0L * (LD)dz, quad);
    LD pref = 1.0L / (4.0L * kPiL * kSqrtPiL);
    return {Complex(double(pref * j.value), 0.0), double(pref * j.error)};
}

} // namespace oracle_detail

Complex pv_correlation_c(const DetectorPair& pair, const Geometry& geom,
                         const QuadratureSpec& quad)
{
    pair.validate();
    geom.validate();
    quad.validate();
    bool boundaryless = geom.alignment == Alignment::Boundaryless;
    if (!boundaryless && geom.dz == 0.0)
        throw std::domain_error("pv_correlation_c: degenerate geometry dz = 0");
    WightmanSpec w = WightmanSpec::for_geometry(geom);
    w.validate();
    return oracle_detail::correlation_c_raw(pair.omega_a, pair.omega_b, w,
                                            boundaryless, quad)
        .value;
}

Complex pv_correlation_x(const DetectorPair& pair, const Geometry& geom,
                         const QuadratureSpec& quad)
{
    pair.validate();
    geom.validate();
    quad.validate();
    bool boundaryless = geom.alignment == Alignment::Boundaryless;
    if (!boundaryless && geom.dz == 0.0)
        throw std::domain_error("pv_correlation_x: degenerate geometry dz = 0");
    WightmanSpec w = WightmanSpec::for_geometry(geom);
    w.validate();
    return oracle_detail::correlation_x_raw(pair.omega_a, pair.omega_b, w,
                                            boundaryless, quad)
        .value;
}

double eps_transition_probability(double gap, double dz, const QuadratureSpec& quad)
{
    if (gap < 0.0)
        throw std::domain_error("eps_transition_probability: gap must be >= 0");
    if (!(dz > 0.0))
        throw std::domain_error("eps_transition_probability: degenerate geometry dz = 0");
    quad.validate();
    // keep extended precision through the direct-minus-image cancellation;
    // near the mirror the two pieces agree to many digits
    DirectResult direct = direct_eps_ladder((LD)gap, quad);
    IntegralResult image = sokhotski_line((LD)gap, 2.0L * (LD)dz, quad);
    LD pref = 1.0L / (4.0L * kPiL * kSqrtPiL);
    return double(pref * (image.value - direct.value));
}

std::vector<CertificationPoint> default_certification_grid()
{
    const double omegas[] = {0.0, 0.1, 0.5, 1.1, 2.0};
    const double d_omegas[] = {0.0, 0.08, 0.5, 1.0};
    const double seps[] = {0.1, 0.5, 1.5, 5.0};
    const double dzs[] = {0.05, 0.5, 1.0, 3.0, 10.0};
    const Alignment aligns[] = {Alignment::Parallel, Alignment::Vertical};
    std::vector<CertificationPoint> grid;
    grid.reserve(800);
    for (double oa : omegas)
        for (double dm : d_omegas)
            for (double l : seps)
                for (double dz : dzs)
                    for (Alignment al : aligns)
                        grid.push_back({oa, dm, l, dz, al});
    return grid;
}

std::vector<CertificationRow> run_certification(
    const std::vector<CertificationPoint>& grid, const QuadratureSpec& quad,
    double rel_tol, unsigned threads)
{
    quad.validate();
    std::vector<CertificationRow> rows(grid.size());
    parallel_for(grid.size(), threads, [&](std::size_t i) {
        const CertificationPoint& pt = grid[i];
        CertificationRow row;
        row.point = pt;
        DetectorPair pair{pt.omega_a, pt.omega_a + pt.delta_omega, 1.0, 1.0};
        Geometry geom{pt.alignment, pt.separation, pt.dz};
        TwoDetectorState closed = evaluate(pair, geom);

        double dz_b = pt.alignment == Alignment::Vertical ? pt.dz + pt.separation
                                                          : pt.dz;
        double o_pa = eps_transition_probability(pair.omega_a, pt.dz, quad);
        double o_pb = eps_transition_probability(pair.omega_b, dz_b, quad);
        Complex o_c = pv_correlation_c(pair, geom, quad);
        Complex o_x = pv_correlation_x(pair, geom, quad);

        row.err_p_a = rel_diff(closed.p_a, o_pa);
        row.err_p_b = rel_diff(closed.p_b, o_pb);
        row.err_c = rel_diff(closed.c, o_c);
        row.err_x = rel_diff(closed.x, o_x);
        row.worst = std::max(std::max(row.err_p_a, row.err_p_b),
                             std::max(row.err_c, row.err_x));
        row.pass = row.worst <= rel_tol;
        rows[i] = row;
    });
    return rows;
}

} // namespace harvestlab
