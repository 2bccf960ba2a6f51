#include "doctest.h"
#include "wofz_reference.hpp"

#include "harvestlab/detector_model.hpp"
#include "harvestlab/faddeeva.hpp"

#include <cmath>
#include <random>

using namespace harvestlab;

TEST_SUITE("detector_model")
{
    TEST_CASE("flat-space transition probability")
    {
        CHECK(transition_probability(0.0, 0.0, ProbabilityMode::Boundaryless)
              == doctest::Approx(1.0 / (4.0 * pi)).epsilon(1e-14));
        // decreasing in the gap, nonnegative
        double prev = 1.0;
        for (double g = 0.0; g < 6.0; g += 0.25) {
            double p = flat_probability(g);
            CHECK(p >= 0.0);
            CHECK(p < prev + 1e-18);
            prev = p;
        }
        CHECK_THROWS_AS(
            (void)transition_probability(-0.1, 1.0, ProbabilityMode::Boundaryless),
            std::domain_error);
    }

    TEST_CASE("near-boundary probability")
    {
        // leading small-dz behaviour dz^2/(6 pi) at zero gap
        double p = transition_probability(0.0, 0.01, ProbabilityMode::WithBoundary);
        CHECK(p == doctest::Approx(1e-4 / (6.0 * pi)).epsilon(0.02));
        CHECK(transition_probability(0.3, 0.0, ProbabilityMode::WithBoundary) == 0.0);
        CHECK_THROWS_AS(
            (void)transition_probability(0.3, -1.0, ProbabilityMode::WithBoundary),
            std::domain_error);
        // series branch joins the kernel branch smoothly
        for (double gap : {0.0, 0.3, 1.7}) {
            double lo = transition_probability(gap, 0.0099999, ProbabilityMode::WithBoundary);
            double hi = transition_probability(gap, 0.0100001, ProbabilityMode::WithBoundary);
            CHECK(lo == doctest::Approx(hi).epsilon(1e-7));
        }
    }

    TEST_CASE("boundary approach is algebraic, not Gaussian")
    {
        // the image correction decays like exp(-gap^2)/(8 pi dz^2); at
        // dz = 50 that is ~1.6e-5, far above what a Gaussian tail would give
        double flat = flat_probability(0.0);
        double p50 = transition_probability(0.0, 50.0, ProbabilityMode::WithBoundary);
        double dev50 = flat - p50;
        CHECK(dev50 > 0.0);
        CHECK(dev50 == doctest::Approx(1.0 / (8.0 * pi * 50.0 * 50.0)).epsilon(0.01));
        double p100 = transition_probability(0.0, 100.0, ProbabilityMode::WithBoundary);
        CHECK(dev50 / (flat - p100) == doctest::Approx(4.0).epsilon(0.02));
        // the ~1e-9 level is only reached around dz ~ 7e3 sigma
        double p7e3 = transition_probability(0.0, 7000.0, ProbabilityMode::WithBoundary);
        CHECK(std::abs(flat - p7e3) < 1e-9);
    }

    TEST_CASE("aux_f basics")
    {
        // delta_omega = 0, omega_a = 0 specialization:
        // f(L) = exp(-L^2/4) erfi(L/2) / L
        for (double L : {0.3, 1.0, 2.5}) {
            long double erfi = testref::erf_reference({0.0L, (long double)(0.5 * L)}).imag();
            double want = double(std::exp((long double)(-L * L / 4)) * erfi / L);
            CHECK(aux_f(L, 0.0, 0.0) == doctest::Approx(want).epsilon(1e-12));
        }
        CHECK(aux_f(60.0, 0.1, 0.0) < 1e-3);
        CHECK(aux_f(60.0, 0.1, 0.0)
              == doctest::Approx(2.0 * std::exp(-0.01) / (sqrt_pi * 3600.0)).epsilon(0.01));
        // small-L Taylor branch continuity
        for (double beta : {0.0, 0.45}) {
            double lo = aux_f(0.99e-4, beta, 0.0);
            double hi = aux_f(1.01e-4, beta, 0.0);
            CHECK(lo == doctest::Approx(hi).epsilon(1e-9));
        }
    }

    TEST_CASE("aux_g basics")
    {
        // delta_omega = 0: g(L) = (1/L) exp(-L^2/4) (erfi(L/2) + i)
        for (double L : {0.5, 1.5}) {
            Complex g = aux_g(L, 0.0);
            long double erfi = testref::erf_reference({0.0L, (long double)(0.5 * L)}).imag();
            double damp = std::exp(-0.25 * L * L);
            CHECK(g.real() == doctest::Approx(double(damp * erfi / L)).epsilon(1e-12));
            CHECK(g.imag() == doctest::Approx(damp / L).epsilon(1e-14));
        }
        CHECK(std::abs(aux_g(40.0, 0.3)) < 1e-3);
        // Taylor branch continuity (real part; the imaginary pole is explicit)
        Complex lo = aux_g(0.99e-4, 0.16);
        Complex hi = aux_g(1.01e-4, 0.16);
        CHECK(lo.real() == doctest::Approx(hi.real()).epsilon(1e-9));
    }

    TEST_CASE("correlation terms: limits and errors")
    {
        DetectorPair pair{0.1, 0.18, 1.0, 1.0};
        // on the boundary both correlations vanish exactly
        for (Alignment al : {Alignment::Parallel, Alignment::Vertical}) {
            Geometry g{al, 0.7, 0.0};
            CHECK(std::abs(correlation_c(pair, g)) == 0.0);
            CHECK(std::abs(correlation_x(pair, g)) == 0.0);
        }
        // coincident detectors rejected
        Geometry bad{Alignment::Parallel, 0.0, 1.0};
        CHECK_THROWS_AS((void)correlation_c(pair, bad), std::domain_error);
        CHECK_THROWS_AS((void)correlation_x(pair, bad), std::domain_error);

        // far from the mirror the image contribution dies like 1/(2 dz)^2
        Geometry far{Alignment::Parallel, 0.5, 50.0};
        Geometry bl{Alignment::Boundaryless, 0.5, 0.0};
        double beta = 0.5 * (pair.omega_a + pair.omega_b);
        double image_f = 2.0 * std::exp(-beta * beta) / (sqrt_pi * 100.0 * 100.0);
        double pref = std::exp(-0.25 * 0.08 * 0.08) / (4.0 * sqrt_pi);
        double gap = std::abs(correlation_c(pair, far) - correlation_c(pair, bl));
        CHECK(gap == doctest::Approx(pref * image_f).epsilon(0.01));
        // quadratic approach in 1/dz
        Geometry far2{Alignment::Parallel, 0.5, 100.0};
        double gap2 = std::abs(correlation_c(pair, far2) - correlation_c(pair, bl));
        CHECK(gap / gap2 == doctest::Approx(4.0).epsilon(0.02));
    }

    TEST_CASE("gaussian suppression in the gap difference")
    {
        Geometry g{Alignment::Parallel, 0.5, 1.0};
        DetectorPair p3{0.1, 3.1, 1.0, 1.0};
        DetectorPair p6{0.1, 6.1, 1.0, 1.0};
        double c3 = std::abs(correlation_c(p3, g));
        double c6 = std::abs(correlation_c(p6, g));
        CHECK(c6 <= c3 * std::exp(-(36.0 - 9.0) / 4.0) / 2.0);
    }

    TEST_CASE("evaluate assembles the state")
    {
        DetectorPair same{0.4, 0.4, 1.0, 1.0};
        TwoDetectorState par = evaluate(same, {Alignment::Parallel, 1.0, 0.8});
        CHECK(par.p_a == par.p_b); // identical closed-form arguments
        TwoDetectorState ver = evaluate(same, {Alignment::Vertical, 1.0, 0.8});
        CHECK(ver.p_a != ver.p_b); // p_b evaluated at dz + L
        CHECK(ver.p_b
              == doctest::Approx(
                     transition_probability(0.4, 1.8, ProbabilityMode::WithBoundary))
                     .epsilon(1e-15));

        TwoDetectorState bl = evaluate(same, {Alignment::Boundaryless, 1.0, 0.0});
        CHECK(bl.p_a == doctest::Approx(flat_probability(0.4)).epsilon(1e-15));

        CHECK_THROWS_AS((void)evaluate({0.5, 0.1, 1.0, 1.0},
                                       {Alignment::Parallel, 1.0, 1.0}),
                        std::invalid_argument);
    }

    TEST_CASE("positivity over random draws")
    {
        std::mt19937 rng(20240811);
        std::uniform_real_distribution<double> uo(0.0, 3.0), ud(0.0, 3.0);
        std::uniform_real_distribution<double> ul(0.05, 10.0), uz(0.01, 10.0);
        std::uniform_int_distribution<int> ua(0, 1);
        for (int k = 0; k < 10000; ++k) {
            double oa = uo(rng);
            DetectorPair pair{oa, oa + ud(rng), 1.0, 1.0};
            Geometry geom{ua(rng) ? Alignment::Parallel : Alignment::Vertical,
                          ul(rng), uz(rng)};
            TwoDetectorState st = evaluate(pair, geom);
            CHECK(st.p_a >= 0.0);
            CHECK(st.p_b >= 0.0);
            CHECK(st.p_a * st.p_b >= std::norm(st.c) - 1e-12);
        }
    }

    TEST_CASE("alignments meet in the boundaryless limit")
    {
        DetectorPair pair{0.1, 0.18, 1.0, 1.0};
        for (double L : {0.3, 1.0}) {
            TwoDetectorState p = evaluate(pair, {Alignment::Parallel, L, 400.0});
            TwoDetectorState v = evaluate(pair, {Alignment::Vertical, L, 400.0});
            TwoDetectorState b = evaluate(pair, {Alignment::Boundaryless, L, 0.0});
            CHECK(std::abs(p.p_a - v.p_a) < 1e-12);
            CHECK(std::abs(p.p_b - v.p_b) < 1e-8);
            CHECK(std::abs(p.c - b.c) < 1e-6);
            CHECK(std::abs(v.c - p.c) < 1e-8);
            CHECK(std::abs(v.x - p.x) < 1e-8);
        }
    }
}
