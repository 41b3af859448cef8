#include "gwdiv/channel_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gwdiv/quadrature.hpp"

namespace gwdiv::channel {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kSqrt2Pi = 2.5066282746310002;
constexpr double kLn10Over10 = 0.23025850929940457;

// Gaussian mass beyond 10 sigma is < 7.7e-24; quadrature windows are clipped
// accordingly.
constexpr double kTailSigmas = 10.0;

} // namespace

void LognormalParams::validate() const {
    if (!std::isfinite(m) || !std::isfinite(s) || s <= 0.0)
        throw std::domain_error("lognormal params: require finite m and s > 0");
}

void RainFadeParams::validate() const {
    if (!std::isfinite(m1) || !std::isfinite(m2))
        throw std::domain_error("rain fade params: means must be finite");
    if (!(s1 > 0.0) || !(s2 > 0.0) || !std::isfinite(s1) || !std::isfinite(s2))
        throw std::domain_error("rain fade params: sigmas must be positive");
    if (!(rho >= 0.0) || !(rho <= 1.0))
        throw std::domain_error("rain fade params: rho must lie in [0, 1]");
}

LognormalParams RainFadeParams::site(int site_index) const {
    if (site_index == 1) return {m1, s1};
    if (site_index == 2) return {m2, s2};
    throw std::domain_error("rain fade params: site must be 1 or 2");
}

void SiteGeometry::validate() const {
    if (!(separation_km >= 0.0))
        throw std::domain_error("site geometry: separation must be >= 0 km");
}

double normal_upper_tail(double x) { return 0.5 * std::erfc(x / kSqrt2); }

double normal_pdf(double x) { return std::exp(-0.5 * x * x) / kSqrt2Pi; }

double correlation_from_distance(double separation_km) {
    if (!(separation_km >= 0.0) || !std::isfinite(separation_km))
        throw std::domain_error("correlation_from_distance: distance must be >= 0");
    const double d = separation_km;
    return 0.94 * std::exp(-d / 30.0) + 0.06 * std::exp(-(d / 500.0) * (d / 500.0));
}

double attenuation_db_to_gain(double a_db) {
    if (!std::isfinite(a_db))
        throw std::domain_error("attenuation_db_to_gain: attenuation must be finite");
    return std::exp(-kLn10Over10 * a_db);
}

double lognormal_exceed_prob(const LognormalParams& p, double a_db) {
    if (std::isnan(a_db))
        throw std::domain_error("lognormal_exceed_prob: threshold is NaN");
    if (a_db <= 0.0) return 1.0; // attenuation is positive a.s.
    if (std::isinf(a_db)) return 0.0;
    return normal_upper_tail((std::log(a_db) - p.m) / p.s);
}

double lognormal_pdf(const LognormalParams& p, double a) {
    if (a <= 0.0) return 0.0;
    const double u = (std::log(a) - p.m) / p.s;
    return std::exp(-0.5 * u * u) / (a * p.s * kSqrt2Pi);
}

double marginal_exceed_prob(const RainFadeParams& p, int site, double a_db) {
    p.validate();
    if (!std::isfinite(a_db) && !std::isinf(a_db))
        throw std::domain_error("marginal_exceed_prob: threshold must not be NaN");
    return lognormal_exceed_prob(p.site(site), a_db);
}

double joint_exceed_prob(const RainFadeParams& p, double a1_db, double a2_db) {
    p.validate();
    if (std::isnan(a1_db) || std::isnan(a2_db))
        throw std::domain_error("joint_exceed_prob: thresholds must not be NaN");

    if (a1_db <= 0.0 && a2_db <= 0.0) return 1.0;
    if (a1_db <= 0.0) return lognormal_exceed_prob(p.site(2), a2_db);
    if (a2_db <= 0.0) return lognormal_exceed_prob(p.site(1), a1_db);
    if (std::isinf(a1_db) || std::isinf(a2_db)) return 0.0;

    const double beta1 = (std::log(a1_db) - p.m1) / p.s1;
    const double beta2 = (std::log(a2_db) - p.m2) / p.s2;

    if (p.rho == 0.0)
        return normal_upper_tail(beta1) * normal_upper_tail(beta2);
    if (p.rho >= 1.0)
        throw std::domain_error("joint_exceed_prob: rho = 1 makes the joint density singular");

    const double rho = p.rho;
    const double denom = kSqrt2 * std::sqrt(1.0 - rho * rho);
    const auto integrand = [&](double x) {
        return std::exp(-0.5 * x * x) * std::erfc((beta1 - rho * x) / denom);
    };
    const double lo = std::max(beta2, -kTailSigmas);
    const double hi = std::max(beta2, 0.0) + kTailSigmas;
    const double integral =
        quad::integrate(integrand, lo, hi, {.abs_tol = 1e-12, .max_intervals = 4000});
    return std::clamp(integral / (2.0 * kSqrt2Pi), 0.0, 1.0);
}

ChannelSample sample_pair(const RainFadeParams& p, rng::Stream& stream) {
    const double z1 = stream.next_normal();
    const double z2 = stream.next_normal();
    const double c = std::sqrt(std::max(0.0, 1.0 - p.rho * p.rho));
    const double z2c = p.rho * z1 + c * z2; // comonotone at rho = 1

    ChannelSample s;
    s.a1_db = std::exp(p.m1 + p.s1 * z1);
    s.a2_db = std::exp(p.m2 + p.s2 * z2c);
    s.g1_lin = std::exp(-kLn10Over10 * s.a1_db);
    s.g2_lin = std::exp(-kLn10Over10 * s.a2_db);
    return s;
}

} // namespace gwdiv::channel
