#include "gwdiv/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gwdiv/errors.hpp"
#include "gwdiv/quadrature.hpp"

namespace gwdiv::analytic {

namespace {

constexpr double kLn10Over10 = 0.23025850929940457;

double db_to_lin(double x_db) { return std::exp(kLn10Over10 * x_db); }
double lin_to_db(double x) { return std::log(x) / kLn10Over10; }

} // namespace

void LinkScenario::validate() const {
    if (!std::isfinite(cs_snr_ul_db) || !std::isfinite(cs_snr_dl_db) ||
        !std::isfinite(outage_thresh_db) || !std::isfinite(switch_thresh_db))
        throw std::domain_error("link scenario: SNRs and thresholds must be finite");
    fade_ul.validate();
    fade_dl.validate();
    if (!(separation_km >= 0.0))
        throw std::domain_error("link scenario: separation must be >= 0");
}

double uplink_outage_sc(const LinkScenario& sc) {
    sc.validate();
    const double margin = sc.uplink_margin_db();
    return channel::joint_exceed_prob(sc.fade_ul, margin, margin);
}

double uplink_outage_single(const LinkScenario& sc) {
    sc.validate();
    return channel::marginal_exceed_prob(sc.fade_ul, 1, sc.uplink_margin_db());
}

double uplink_outage_mssc(const LinkScenario& sc) {
    sc.validate();
    const double gth = sc.outage_thresh_db;   // Gamma_th
    const double theta = sc.switch_thresh_db; // Theta
    const double cs = sc.cs_snr_ul_db;

    // Attenuation-domain thresholds: {gamma <= u} = {A > cs - u}.
    const auto below_joint = [&](double u_db, double v_db) {
        return channel::joint_exceed_prob(sc.fade_ul, cs - u_db, cs - v_db);
    };
    const auto below_1 = [&](double u_db) {
        return channel::marginal_exceed_prob(sc.fade_ul, 1, cs - u_db);
    };

    if (theta > gth) {
        // The interval [theta, gamma_th] is empty; only the both-below event
        // Pr{gamma_1 <= gamma_th, gamma_2 <= theta} remains.
        return below_joint(gth, theta);
    }
    const double t1 = below_joint(theta, theta);         // gamma_1 <= theta (and <= gth), gamma_2 <= theta
    const double t2 = below_joint(gth, theta) - t1;      // theta <= gamma_1 <= gth, gamma_2 <= theta
    const double t3 = below_1(gth) - below_1(theta);     // theta <= gamma_1 <= gth
    return std::clamp(t1 + t2 + t3, 0.0, 1.0);
}

double downlink_outage(const LinkScenario& sc) {
    sc.validate();
    return channel::lognormal_exceed_prob(sc.fade_dl,
                                          sc.cs_snr_dl_db - sc.outage_thresh_db);
}

double downlink_snr_pdf(const LinkScenario& sc, double gamma_g) {
    sc.validate();
    if (!(gamma_g > 0.0))
        throw std::domain_error("downlink_snr_pdf: gamma_g must be > 0");
    const double a_db = sc.cs_snr_dl_db - lin_to_db(gamma_g);
    if (a_db <= 0.0) return 0.0; // at/above clear sky
    return channel::lognormal_pdf(sc.fade_dl, a_db) * 10.0 /
           (gamma_g * 2.302585092994046);
}

namespace {

// Pr{gamma_g <= u} for a linear threshold u.
double downlink_cdf(const LinkScenario& sc, double u) {
    if (u <= 0.0) return 0.0;
    return channel::lognormal_exceed_prob(sc.fade_dl,
                                          sc.cs_snr_dl_db - lin_to_db(u));
}

double uplink_outage_at_threshold(const LinkScenario& sc, UplinkKind kind,
                                  double gamma_th_lin) {
    const double margin = sc.cs_snr_ul_db - lin_to_db(gamma_th_lin);
    if (margin <= 0.0) return 1.0;
    if (kind == UplinkKind::Single)
        return channel::marginal_exceed_prob(sc.fade_ul, 1, margin);
    return channel::joint_exceed_prob(sc.fade_ul, margin, margin);
}

} // namespace

double e2e_outage(const LinkScenario& sc, UplinkKind uplink) {
    sc.validate();
    const double gth = db_to_lin(sc.outage_thresh_db);
    const double gcs_dl = db_to_lin(sc.cs_snr_dl_db);
    const double gcs_ul = db_to_lin(sc.cs_snr_ul_db);

    if (gth >= gcs_dl) return 1.0; // gamma_eq < gamma_g <= gamma_CS_DL a.s.

    double prob = downlink_cdf(sc, gth); // P_DL: gamma_g <= gamma_th forces outage

    // z(gamma_g) = gamma_th (gamma_g + 1)/(gamma_g - gamma_th) exceeds the
    // uplink clear-sky SNR (P_UL = 1) up to gamma_star.
    const double gamma_star =
        gcs_ul > gth ? gth * (gcs_ul + 1.0) / (gcs_ul - gth)
                     : std::numeric_limits<double>::infinity();

    // Near-singular slice gamma_th .. gamma_th(1+eps): P_UL bounded by 1,
    // the mass taken exactly from the CDF. The slice is inside the
    // saturated region whenever gamma_star > lo, so the bound is exact there.
    const double lo = gth * (1.0 + 1e-6);
    const double sat_hi = std::clamp(gamma_star, lo, gcs_dl);
    prob += downlink_cdf(sc, sat_hi) - downlink_cdf(sc, gth);

    if (sat_hi < gcs_dl) {
        // Smooth remainder, integrated in the standard-normal domain of the
        // downlink fade: A_g = exp(m + s t), gamma_g = gamma_CS_DL 10^(-A_g/10).
        const double a_hi_db = sc.cs_snr_dl_db - lin_to_db(sat_hi);
        const double t_max =
            std::min(10.0, (std::log(a_hi_db) - sc.fade_dl.m) / sc.fade_dl.s);
        if (t_max > -10.0) {
            const auto integrand = [&](double t) {
                const double a_db = std::exp(sc.fade_dl.m + sc.fade_dl.s * t);
                const double gamma_g = gcs_dl * std::exp(-kLn10Over10 * a_db);
                const double z = gth * (gamma_g + 1.0) / (gamma_g - gth);
                return uplink_outage_at_threshold(sc, uplink, z) *
                       channel::normal_pdf(t);
            };
            prob += quad::integrate(integrand, -10.0, t_max,
                                    {.abs_tol = 1e-10, .max_intervals = 2000});
        }
    }
    return std::clamp(prob, 0.0, 1.0);
}

double regenerative_bound(const LinkScenario& sc, UplinkKind uplink) {
    sc.validate();
    const double pul = uplink == UplinkKind::Single ? uplink_outage_single(sc)
                                                    : uplink_outage_sc(sc);
    const double pdl = downlink_outage(sc);
    return pdl * (1.0 - pul) + pul;
}

LinkScenario apply_axis(const LinkScenario& sc, SweepAxis axis, double value) {
    LinkScenario out = sc;
    switch (axis) {
        case SweepAxis::ClearSkySnrDb:
            out.cs_snr_ul_db = value;
            break;
        case SweepAxis::MarginDb: {
            const double theta_offset = sc.switch_thresh_db - sc.outage_thresh_db;
            out.outage_thresh_db = sc.cs_snr_ul_db - value;
            out.switch_thresh_db = out.outage_thresh_db + theta_offset;
            break;
        }
        case SweepAxis::DistanceKm:
            out.separation_km = value;
            out.fade_ul.rho = channel::correlation_from_distance(value);
            break;
        case SweepAxis::ThetaDb:
            out.switch_thresh_db = value;
            break;
        case SweepAxis::Rho:
            out.fade_ul.rho = value;
            break;
    }
    out.validate();
    return out;
}

double uplink_outage(const LinkScenario& sc, switching::SchemeKind scheme) {
    switch (scheme) {
        case switching::SchemeKind::SC:     return uplink_outage_sc(sc);
        case switching::SchemeKind::MSSC:   return uplink_outage_mssc(sc);
        case switching::SchemeKind::Single: return uplink_outage_single(sc);
        case switching::SchemeKind::SSC:
        case switching::SchemeKind::MRC:
            throw ConfigError(std::string("no analytic uplink outage for scheme '") +
                              switching::to_string(scheme) + "'");
    }
    throw ConfigError("unknown scheme");
}

OutageCurve outage_curve(const LinkScenario& sc, switching::SchemeKind scheme,
                         SweepAxis axis, std::span<const double> values) {
    if (values.empty()) throw ConfigError("outage_curve: empty sweep");
    OutageCurve curve;
    curve.scheme = scheme;
    curve.method = Method::Analytic;
    curve.axis = axis;
    curve.rho = sc.fade_ul.rho;
    curve.separation_km = sc.separation_km;
    curve.outage_thresh_db = sc.outage_thresh_db;
    curve.switch_thresh_db = sc.switch_thresh_db;
    curve.points.reserve(values.size());
    for (double v : values) {
        const LinkScenario point_sc = apply_axis(sc, axis, v);
        CurvePoint pt;
        pt.abscissa = v;
        pt.outage = uplink_outage(point_sc, scheme);
        curve.points.push_back(pt);
    }
    curve.validate();
    return curve;
}

} // namespace gwdiv::analytic

namespace gwdiv {

void OutageCurve::validate() const {
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& pt = points[i];
        if (!(pt.outage >= 0.0 && pt.outage <= 1.0))
            throw std::domain_error("outage curve: probability outside [0, 1]");
        if (i > 0 && !(points[i - 1].abscissa < pt.abscissa))
            throw std::domain_error("outage curve: abscissa must be strictly increasing");
    }
}

} // namespace gwdiv
