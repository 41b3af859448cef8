#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "gwdiv/channel_model.hpp"
#include "gwdiv/rng.hpp"

using namespace gwdiv;
using channel::RainFadeParams;

namespace {

// Correlated standard-normal pair straight off a stream (test-side oracle,
// independent of channel::sample_pair).
struct GaussPair {
    double z1, z2;
};
GaussPair draw_pair(rng::Stream& s, double rho) {
    const double z1 = s.next_normal();
    const double z2 = rho * z1 + std::sqrt(1.0 - rho * rho) * s.next_normal();
    return {z1, z2};
}

} // namespace

TEST_CASE("correlation_from_distance: endpoints and frozen value") {
    CHECK(channel::correlation_from_distance(0.0) == doctest::Approx(1.0).epsilon(1e-14));
    // high-precision evaluation of the formula at D = 20 km
    CHECK(channel::correlation_from_distance(20.0) ==
          doctest::Approx(0.5425161686496929).epsilon(1e-12));
    CHECK(channel::correlation_from_distance(10000.0) < 1e-6);
    CHECK_THROWS_AS(channel::correlation_from_distance(-1.0), std::domain_error);
}

TEST_CASE("correlation_from_distance is strictly decreasing") {
    double prev = channel::correlation_from_distance(0.0);
    for (double d = 2.0; d <= 600.0; d += 2.0) {
        const double r = channel::correlation_from_distance(d);
        CHECK(r < prev);
        prev = r;
    }
    const double r20 = channel::correlation_from_distance(20.0);
    const double r100 = channel::correlation_from_distance(100.0);
    CHECK(1.0 > r20);
    CHECK(r20 > r100);
}

TEST_CASE("attenuation_db_to_gain: identities") {
    CHECK(channel::attenuation_db_to_gain(0.0) == 1.0);
    CHECK(channel::attenuation_db_to_gain(10.0) == doctest::Approx(0.1).epsilon(1e-14));
    // a solving 10^(-a/10) = 1/2
    CHECK(channel::attenuation_db_to_gain(3.0102999566398120) ==
          doctest::Approx(0.5).epsilon(1e-14));
    CHECK_THROWS_AS(channel::attenuation_db_to_gain(
                        std::numeric_limits<double>::quiet_NaN()),
                    std::domain_error);
}

TEST_CASE("gain of -10 log10(g) is the identity on (0, 1]") {
    for (double g = 0.05; g <= 1.0; g += 0.05) {
        const double a = -10.0 * std::log10(g);
        CHECK(channel::attenuation_db_to_gain(a) == doctest::Approx(g).epsilon(1e-12));
    }
}

TEST_CASE("marginal_exceed_prob: lognormal tail") {
    RainFadeParams p{0.0, 0.0, 1.0, 1.0, 0.0};
    // median of the lognormal is e^m = 1
    CHECK(channel::marginal_exceed_prob(p, 1, 1.0) == doctest::Approx(0.5).epsilon(1e-14));
    // Q(1) via the erfc oracle
    CHECK(channel::marginal_exceed_prob(p, 1, std::exp(1.0)) ==
          doctest::Approx(0.158655253931457).epsilon(1e-12));
    CHECK(channel::marginal_exceed_prob(p, 2, 0.0) == 1.0);
    CHECK(channel::marginal_exceed_prob(p, 1, -3.0) == 1.0);
    CHECK_THROWS_AS(channel::marginal_exceed_prob(
                        p, 1, std::numeric_limits<double>::quiet_NaN()),
                    std::domain_error);
    CHECK_THROWS_AS(channel::marginal_exceed_prob(p, 3, 1.0), std::domain_error);
}

TEST_CASE("joint_exceed_prob: independence factorizes") {
    RainFadeParams p{-0.2, 0.1, 1.1, 0.9, 0.0};
    const double a1 = 4.0, a2 = 7.0;
    const double expect = channel::marginal_exceed_prob(p, 1, a1) *
                          channel::marginal_exceed_prob(p, 2, a2);
    CHECK(channel::joint_exceed_prob(p, a1, a2) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("joint_exceed_prob: comonotone limit reaches the marginal") {
    RainFadeParams p{-0.2, -0.2, 1.1, 1.1, 1.0 - 1e-9};
    const double a = 6.0;
    const double marginal = channel::marginal_exceed_prob(p, 1, a);
    CHECK(channel::joint_exceed_prob(p, a, a) ==
          doctest::Approx(marginal).epsilon(1e-6));
    p.rho = 1.0;
    CHECK_THROWS_AS(channel::joint_exceed_prob(p, a, a), std::domain_error);
}

TEST_CASE("joint_exceed_prob: zero-threshold values match the arcsine law") {
    // P(Z1 > 0, Z2 > 0) = 1/4 + asin(rho)/(2 pi); thresholds a = e^m hit beta = 0
    const double expected[5] = {0.25, 0.290215311627583, 1.0 / 3.0,
                                0.384973271918692, 0.449458687947870};
    const double rhos[5] = {0.0, 0.25, 0.5, 0.75, 0.95};
    for (int i = 0; i < 5; ++i) {
        RainFadeParams p{0.3, 0.3, 0.8, 0.8, rhos[i]};
        const double a = std::exp(0.3);
        CHECK(channel::joint_exceed_prob(p, a, a) ==
              doctest::Approx(expected[i]).epsilon(1e-10));
    }
}

TEST_CASE("joint_exceed_prob: frozen bivariate-tail oracle values") {
    // Independent oracle: Genz-algorithm bivariate normal CDF (scipy),
    // P(Z1 > b1, Z2 > b2) mapped onto lognormal thresholds a_i = exp(m + s b_i).
    struct Case {
        double b1, b2, rho, expect;
    };
    const Case cases[] = {
        {0.7, -0.3, 0.6, 0.217167225451906},
        {1.2, 0.4, 0.3, 0.0625714171438306},
        {-1.0, -1.0, 0.8, 0.780326011218644},
        {2.0, 2.0, 0.5, 0.00405294623516298},
    };
    for (const auto& c : cases) {
        RainFadeParams p{-0.1, 0.2, 0.9, 1.3, c.rho};
        const double a1 = std::exp(p.m1 + p.s1 * c.b1);
        const double a2 = std::exp(p.m2 + p.s2 * c.b2);
        CHECK(channel::joint_exceed_prob(p, a1, a2) ==
              doctest::Approx(c.expect).epsilon(1e-8));
    }
}

TEST_CASE("joint_exceed_prob: threshold edge cases") {
    RainFadeParams p{0.0, 0.0, 1.0, 1.0, 0.5};
    CHECK(channel::joint_exceed_prob(p, -1.0, -2.0) == 1.0);
    CHECK(channel::joint_exceed_prob(p, 0.0, 1.0) ==
          doctest::Approx(channel::marginal_exceed_prob(p, 2, 1.0)).epsilon(1e-12));
    CHECK(channel::joint_exceed_prob(p, 1.0, 0.0) ==
          doctest::Approx(channel::marginal_exceed_prob(p, 1, 1.0)).epsilon(1e-12));
    CHECK_THROWS_AS(channel::joint_exceed_prob(
                        p, std::numeric_limits<double>::quiet_NaN(), 1.0),
                    std::domain_error);
}

TEST_CASE("joint_exceed_prob agrees with a correlated-gaussian Monte Carlo") {
    // Spec case m = 0, s = 1, rho = 0.5, a1 = a2 = 1 (exactly 1/3 by the
    // arcsine law); checked against a 1e7-sample MC within 3 binomial sigma.
    RainFadeParams p{0.0, 0.0, 1.0, 1.0, 0.5};
    const double analytic = channel::joint_exceed_prob(p, 1.0, 1.0);
    CHECK(analytic > 0.25);
    CHECK(analytic < 0.5);
    CHECK(analytic == doctest::Approx(1.0 / 3.0).epsilon(1e-10));

    rng::Stream s(987654321);
    const int n = 10'000'000;
    long hits = 0;
    for (int i = 0; i < n; ++i) {
        const auto [z1, z2] = draw_pair(s, p.rho);
        hits += (z1 > 0.0) && (z2 > 0.0); // ln a = 0 -> beta = 0
    }
    const double est = static_cast<double>(hits) / n;
    const double se = std::sqrt(est * (1.0 - est) / n);
    CHECK(std::abs(analytic - est) < 3.0 * se);
}

TEST_CASE("coupling bound: joint <= marginal <= 1") {
    for (double rho : {0.0, 0.3, 0.8, 0.99}) {
        RainFadeParams p{-0.2, -0.2, 1.1, 1.1, rho};
        for (double a : {0.5, 2.0, 8.0, 20.0}) {
            const double joint = channel::joint_exceed_prob(p, a, a);
            const double marginal = channel::marginal_exceed_prob(p, 1, a);
            CHECK(joint <= marginal + 1e-12);
            CHECK(marginal <= 1.0);
        }
    }
}

TEST_CASE("joint exceedance is non-decreasing in rho") {
    const double rhos[] = {0.0, 0.25, 0.5, 0.75, 0.95};
    for (double a : {1.0, 4.0, 10.0}) {
        double prev = -1.0;
        for (double rho : rhos) {
            RainFadeParams p{-0.2, -0.2, 1.1, 1.1, rho};
            const double joint = channel::joint_exceed_prob(p, a, a);
            CHECK(joint >= prev - 1e-12);
            prev = joint;
        }
    }
}

TEST_CASE("sample_pair: comonotone limit ties the log-attenuations") {
    RainFadeParams p{-0.2, -0.2, 1.1, 1.1, 1.0 - 1e-12};
    rng::Stream s(5);
    const int n = 100'000;
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        const auto c = channel::sample_pair(p, s);
        const double x = std::log(c.a1_db), y = std::log(c.a2_db);
        sx += x; sy += y; sxx += x * x; syy += y * y; sxy += x * y;
    }
    const double corr = (sxy / n - sx / n * sy / n) /
                        std::sqrt((sxx / n - sx / n * sx / n) *
                                  (syy / n - sy / n * sy / n));
    CHECK(corr > 0.99);
}

TEST_CASE("sample_pair: rho = 0 leaves log-attenuations uncorrelated") {
    RainFadeParams p{-0.2, -0.2, 1.1, 1.1, 0.0};
    rng::Stream s(17);
    const int n = 1'000'000;
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        const auto c = channel::sample_pair(p, s);
        const double x = std::log(c.a1_db), y = std::log(c.a2_db);
        sx += x; sy += y; sxx += x * x; syy += y * y; sxy += x * y;
    }
    const double corr = (sxy / n - sx / n * sy / n) /
                        std::sqrt((sxx / n - sx / n * sx / n) *
                                  (syy / n - sy / n * sy / n));
    CHECK(std::abs(corr) < 0.003); // ~3/sqrt(n)
}

TEST_CASE("sample_pair: gains match the attenuations exactly") {
    RainFadeParams p{-0.2, 0.4, 1.1, 0.7, 0.4};
    rng::Stream s(99);
    for (int i = 0; i < 1000; ++i) {
        const auto c = channel::sample_pair(p, s);
        CHECK(c.a1_db > 0.0);
        CHECK(c.a2_db > 0.0);
        CHECK(c.g1_lin == doctest::Approx(std::pow(10.0, -c.a1_db / 10.0)).epsilon(1e-12));
        CHECK(c.g2_lin == doctest::Approx(std::pow(10.0, -c.a2_db / 10.0)).epsilon(1e-12));
        CHECK(c.g1_lin > 0.0);
        CHECK(c.g1_lin < 1.0);
    }
}

TEST_CASE("sample_pair: log-attenuation moments match (m, s)") {
    RainFadeParams p{-0.2, 0.3, 1.1, 0.6, 0.5425161686496929};
    rng::Stream s(2024);
    const int n = 1'000'000;
    double s1 = 0, s2 = 0, q1 = 0, q2 = 0;
    for (int i = 0; i < n; ++i) {
        const auto c = channel::sample_pair(p, s);
        const double x = std::log(c.a1_db), y = std::log(c.a2_db);
        s1 += x; q1 += x * x; s2 += y; q2 += y * y;
    }
    const double mean1 = s1 / n, var1 = q1 / n - mean1 * mean1;
    const double mean2 = s2 / n, var2 = q2 / n - mean2 * mean2;
    // 5 standard errors of the mean and of the variance
    CHECK(std::abs(mean1 - p.m1) < 5.0 * p.s1 / std::sqrt(static_cast<double>(n)));
    CHECK(std::abs(mean2 - p.m2) < 5.0 * p.s2 / std::sqrt(static_cast<double>(n)));
    CHECK(std::abs(var1 - p.s1 * p.s1) <
          5.0 * p.s1 * p.s1 * std::sqrt(2.0 / n));
    CHECK(std::abs(var2 - p.s2 * p.s2) <
          5.0 * p.s2 * p.s2 * std::sqrt(2.0 / n));
}

TEST_CASE("sampled joint exceedance is consistent with the quadrature") {
    RainFadeParams p{-0.2, -0.2, 1.1, 1.1, 0.5425161686496929};
    const double a = std::exp(-0.2); // median, healthy event rate
    const double analytic = channel::joint_exceed_prob(p, a, a);

    rng::Stream s(31337);
    const int n = 10'000'000;
    long hits = 0;
    for (int i = 0; i < n; ++i) {
        const auto c = channel::sample_pair(p, s);
        hits += (c.a1_db > a) && (c.a2_db > a);
    }
    const double est = static_cast<double>(hits) / n;
    const double se = std::sqrt(est * (1.0 - est) / n);
    CHECK(std::abs(analytic - est) < 3.0 * se);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS((RainFadeParams{0, 0, 0.0, 1, 0}).validate(), std::domain_error);
    CHECK_THROWS_AS((RainFadeParams{0, 0, 1, -1, 0}).validate(), std::domain_error);
    CHECK_THROWS_AS((RainFadeParams{0, 0, 1, 1, -0.1}).validate(), std::domain_error);
    CHECK_THROWS_AS((RainFadeParams{0, 0, 1, 1, 1.5}).validate(), std::domain_error);
    CHECK_NOTHROW((RainFadeParams{0, 0, 1, 1, 1.0}).validate());
    CHECK_THROWS_AS((channel::SiteGeometry{-2.0}).validate(), std::domain_error);
    CHECK_NOTHROW((channel::SiteGeometry{0.0}).validate());
}
