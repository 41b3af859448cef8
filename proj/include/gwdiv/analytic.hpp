#pragma once

#include <span>
#include <vector>

#include "gwdiv/channel_model.hpp"
#include "gwdiv/curve.hpp"

namespace gwdiv::analytic {

// Full link description: clear-sky SNRs of both hops, outage threshold
// gamma_th and switching threshold theta (both in dB), the correlated uplink
// fade model and the single-site downlink fade model.
struct LinkScenario {
    double cs_snr_ul_db = 28.3;
    double cs_snr_dl_db = 21.3;
    double outage_thresh_db = 18.3;
    double switch_thresh_db = 18.3;
    channel::RainFadeParams fade_ul;
    channel::LognormalParams fade_dl;
    double separation_km = 0.0; // informational; fade_ul.rho is authoritative

    void validate() const;
    double uplink_margin_db() const { return cs_snr_ul_db - outage_thresh_db; }
};

// Which uplink law feeds the end-to-end integral.
enum class UplinkKind { Diversity, Single };

// Feeder-uplink outage of the SC scheme (equals MSSC at theta = gamma_th):
// Pr{A1 > margin, A2 > margin}; 1 when the margin is non-positive.
double uplink_outage_sc(const LinkScenario& sc);

// Feeder-uplink outage of MSSC at the scenario's switching threshold theta.
// For theta <= gamma_th the three-term decomposition over the Table-I events;
// for theta > gamma_th the middle/last terms are empty and the result is
// Pr{gamma1 <= gamma_th, gamma2 <= theta}.
double uplink_outage_mssc(const LinkScenario& sc);

// Single-gateway baseline Pr{A1 > margin}.
double uplink_outage_single(const LinkScenario& sc);

// Downlink outage P_DL = Pr{gamma_g < gamma_th}.
double downlink_outage(const LinkScenario& sc);

// Density of the faded downlink SNR gamma_g = gamma_CS_DL 10^(-A_g/10) at
// gamma_g > 0; zero at and beyond the clear-sky value.
double downlink_snr_pdf(const LinkScenario& sc, double gamma_g);

// End-to-end outage of the transparent link, Pr{gamma_eq <= gamma_th} with
// gamma_eq = gamma_g gamma_h / (gamma_g + gamma_h + 1):
//   P_DL + integral_{gamma_th}^{gamma_CS_DL} P_UL(z(gamma_g)) f_g d gamma_g,
// z = gamma_th (gamma_g + 1)/(gamma_g - gamma_th), P_UL = 1 wherever the
// required uplink margin is non-positive. Requires theta = gamma_th for the
// diversity uplink (SC-equivalent analysis).
double e2e_outage(const LinkScenario& sc, UplinkKind uplink = UplinkKind::Diversity);

// Regenerative-repeater outage P_DL (1 - P_UL) + P_UL; strict lower bound of
// the transparent e2e outage.
double regenerative_bound(const LinkScenario& sc, UplinkKind uplink = UplinkKind::Diversity);

// Scenario surgery for sweeps; margin moves the outage threshold and keeps
// the switch threshold at its configured dB offset from it.
LinkScenario apply_axis(const LinkScenario& sc, SweepAxis axis, double value);

// Analytic uplink outage for a scheme (SSC/MRC have no analytic form here
// and raise ConfigError).
double uplink_outage(const LinkScenario& sc, switching::SchemeKind scheme);

// Analytic outage curve over a strictly monotone sweep.
OutageCurve outage_curve(const LinkScenario& sc, switching::SchemeKind scheme,
                         SweepAxis axis, std::span<const double> values);

} // namespace gwdiv::analytic
