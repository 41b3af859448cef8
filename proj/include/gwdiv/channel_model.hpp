#pragma once

#include "gwdiv/rng.hpp"

namespace gwdiv::channel {

// Lognormal rain-fade parameters of one site: ln A is Gaussian with mean m
// and standard deviation s, A the rain attenuation in dB.
struct LognormalParams {
    double m = 0.0;
    double s = 1.0;

    void validate() const; // throws std::domain_error
};

// Joint lognormal fade model of the two gateway sites. rho is the spatial
// correlation of ln A; rho = 1 is admitted only by the degenerate sampling
// path (z1 = z2), the quadrature paths reject it.
struct RainFadeParams {
    double m1 = 0.0, m2 = 0.0;
    double s1 = 1.0, s2 = 1.0;
    double rho = 0.0;

    void validate() const; // throws std::domain_error
    LognormalParams site(int site_index) const; // 1 or 2
};

struct SiteGeometry {
    double separation_km = 0.0;

    void validate() const;
};

// One uplink fade draw: attenuations in dB and the matching linear power
// gains 10^(-A/10).
struct ChannelSample {
    double a1_db = 0.0, a2_db = 0.0;
    double g1_lin = 1.0, g2_lin = 1.0;
};

// Standard normal upper tail Q(x) = erfc(x/sqrt(2))/2 and density.
double normal_upper_tail(double x);
double normal_pdf(double x);

// Spatial correlation of ln-attenuation for two sites D km apart:
// 0.94 exp(-D/30) + 0.06 exp(-(D/500)^2). Strictly decreasing, (0, 1].
double correlation_from_distance(double separation_km);

// Linear power gain 10^(-a/10) of an attenuation in dB.
double attenuation_db_to_gain(double a_db);

// Pr{A > a_db} for one site's lognormal attenuation; 1 for a_db <= 0
// (attenuation is positive almost surely).
double lognormal_exceed_prob(const LognormalParams& p, double a_db);

// Density of the attenuation (dB domain) at a > 0.
double lognormal_pdf(const LognormalParams& p, double a);

// Pr{A_site > a_db}; site is 1 or 2.
double marginal_exceed_prob(const RainFadeParams& p, int site, double a_db);

// Pr{A1 > a1_db, A2 > a2_db} by one-dimensional Gauss-Kronrod quadrature of
// the exp(-x^2/2) erfc((beta1 - rho x)/sqrt(2(1-rho^2))) kernel with
// beta_i = (ln a_i - m_i)/s_i. Absolute accuracy 1e-12 requested, Gaussian
// tails truncated at 10 sigma (truncation < 1e-23). Thresholds <= 0 reduce
// to the other margin. rho = 1 is a domain error here.
double joint_exceed_prob(const RainFadeParams& p, double a1_db, double a2_db);

// Draw a correlated attenuation pair: (z1, z2) bivariate standard normal via
// the 2x2 Cholesky factor, A_i = exp(m_i + s_i z_i). Successive calls are
// independent in time.
ChannelSample sample_pair(const RainFadeParams& p, rng::Stream& stream);

} // namespace gwdiv::channel
