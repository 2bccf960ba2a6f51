#include "doctest.h"

#include "harvestlab/measures.hpp"

#include <cmath>
#include <random>

using namespace harvestlab;

namespace {

TwoDetectorState random_state(std::mt19937& rng, bool allow_tiny_c = false)
{
    std::uniform_real_distribution<double> up(1e-6, 0.05);
    std::uniform_real_distribution<double> uf(allow_tiny_c ? 0.0 : 0.01, 0.999);
    std::uniform_real_distribution<double> uph(0.0, 2.0 * pi);
    TwoDetectorState st;
    st.p_a = up(rng);
    st.p_b = up(rng);
    double cmag = uf(rng) * std::sqrt(st.p_a * st.p_b);
    st.c = std::polar(cmag, uph(rng));
    st.x = std::polar(up(rng), uph(rng));
    return st;
}

// Eq.-level evaluation at explicit coupling: scale the state entries by
// lambda^2 first, then apply the entropy formula.
double mi_at_coupling(const TwoDetectorState& st, double lambda)
{
    double l2 = lambda * lambda;
    TwoDetectorState scaled{l2 * st.p_a, l2 * st.p_b, l2 * st.c, l2 * st.x};
    return mutual_information(scaled);
}

} // namespace

TEST_SUITE("measures")
{
    TEST_CASE("concurrence basics")
    {
        TwoDetectorState st;
        st.p_a = st.p_b = 1e-4;
        st.x = 0.0;
        CHECK(concurrence(st) == 0.0);
        st.x = Complex(0.0, 0.02);
        CHECK(concurrence(st) == doctest::Approx(0.0398).epsilon(1e-12));
    }

    TEST_CASE("mutual information exact zeros and closed forms")
    {
        TwoDetectorState st;
        st.p_a = 0.01;
        st.p_b = 0.03;
        st.c = 0.0;
        CHECK(mutual_information(st) == 0.0);

        st.p_a = 0.0;
        st.c = 0.0;
        CHECK(mutual_information(st) == 0.0);

        // p_a = p_b = p, |c| = p  ->  MI = 2 p ln 2
        double p = 0.007;
        TwoDetectorState deg{p, p, Complex(p, 0.0), 0.0};
        CHECK(mutual_information(deg) == doctest::Approx(2.0 * p * ln2).epsilon(1e-13));
    }

    TEST_CASE("eigenvalue pair bookkeeping")
    {
        std::mt19937 rng(99);
        for (int k = 0; k < 2000; ++k) {
            TwoDetectorState st = random_state(rng);
            CorrelationReport rep = make_report(st);
            CHECK(rep.l_plus >= rep.l_minus);
            CHECK(rep.l_minus >= 0.0);
            CHECK(std::abs(rep.l_plus + rep.l_minus - (st.p_a + st.p_b))
                  <= 1e-14 * (st.p_a + st.p_b));
        }
    }

    TEST_CASE("MI nonnegative and cancellation-safe branch consistent")
    {
        std::mt19937 rng(7);
        for (int k = 0; k < 10000; ++k) {
            TwoDetectorState st = random_state(rng, true);
            double mi = mutual_information(st);
            CHECK(mi >= 0.0);
        }
        // compare tiny-|c| expansion against a long-double direct evaluation
        TwoDetectorState st{0.011, 0.013, Complex(1e-12, 0.0), 0.0};
        long double pa = 0.011L, pb = 0.013L, c = 1e-12L;
        long double dd = 0.5L * (pa - pb);
        long double r = std::sqrt(dd * dd + c * c);
        long double lp = 0.5L * (pa + pb) + r, lm = 0.5L * (pa + pb) - r;
        long double direct = lp * std::log(lp) + lm * std::log(lm)
                             - pa * std::log(pa) - pb * std::log(pb);
        CHECK(mutual_information(st) == doctest::Approx(double(direct)).epsilon(1e-6));
        // and the symmetric-probability limit
        TwoDetectorState sym{0.011, 0.011, Complex(1e-12, 0.0), 0.0};
        CHECK(mutual_information(sym)
              == doctest::Approx(1e-24 / 0.011).epsilon(1e-9));
    }

    TEST_CASE("MI monotone in |c| and in the probabilities")
    {
        // increasing in |c| at fixed p's
        double prev = -1.0;
        for (double c = 0.0005; c <= 0.009; c += 0.0005) {
            TwoDetectorState st{0.01, 0.012, Complex(c, 0.0), 0.0};
            double mi = mutual_information(st);
            CHECK(mi > prev);
            prev = mi;
        }
        // decreasing in p_a at fixed p_b, |c| while positivity holds
        prev = std::numeric_limits<double>::infinity();
        for (double pa = 0.004; pa <= 0.02; pa += 0.001) {
            TwoDetectorState st{pa, 0.012, Complex(0.003, 0.0), 0.0};
            double mi = mutual_information(st);
            CHECK(mi < prev);
            prev = mi;
        }
    }

    TEST_CASE("exact lambda^2 scaling")
    {
        std::mt19937 rng(4242);
        for (int k = 0; k < 100; ++k) {
            TwoDetectorState st = random_state(rng);
            double mi1 = mi_at_coupling(st, 1.0);
            double mi2 = mi_at_coupling(st, 2.0);
            REQUIRE(mi1 > 0.0);
            CHECK(std::abs(mi2 / mi1 - 4.0) <= 1e-12 * 4.0);

            TwoDetectorState scaled{4.0 * st.p_a, 4.0 * st.p_b, 4.0 * st.c, 4.0 * st.x};
            CHECK(concurrence(scaled)
                  == doctest::Approx(4.0 * concurrence(st)).epsilon(1e-14));
        }
    }

    TEST_CASE("rescale_report")
    {
        TwoDetectorState st{0.02, 0.03, Complex(0.01, 0.004), Complex(0.0, 0.03)};
        CorrelationReport rep = make_report(st);
        CorrelationReport same = rescale_report(rep, 1.0);
        CHECK(same.concurrence == rep.concurrence);
        CHECK(same.mutual_info == rep.mutual_info);

        CorrelationReport doubled = rescale_report(rep, 2.0);
        CHECK(doubled.concurrence == doctest::Approx(4.0 * rep.concurrence).epsilon(1e-15));
        CHECK(doubled.mutual_info == doctest::Approx(4.0 * rep.mutual_info).epsilon(1e-15));
        CHECK(doubled.l_plus == doctest::Approx(4.0 * rep.l_plus).epsilon(1e-15));
        // 4 * (0.02 + 0.03) = 0.2 crosses the perturbative threshold
        CHECK(rep.perturbative_ok);
        CHECK_FALSE(doubled.perturbative_ok);

        CHECK_THROWS_AS((void)rescale_report(rep, 0.0), std::invalid_argument);
    }
}
