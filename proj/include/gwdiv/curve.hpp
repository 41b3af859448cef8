#pragma once

#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gwdiv/scheme.hpp"

namespace gwdiv {

enum class Method { Analytic, MonteCarlo };

constexpr const char* to_string(Method m) {
    return m == Method::Analytic ? "analytic" : "montecarlo";
}

// Sweep axes accepted by the analytic and Monte Carlo curve generators.
//   ClearSkySnrDb — uplink clear-sky SNR (dB); outage threshold fixed
//   MarginDb      — uplink fade margin (dB); moves the outage threshold and
//                   keeps the switch threshold at its configured offset
//   DistanceKm    — gateway separation; correlation follows rho(D)
//   ThetaDb       — switching threshold (dB)
//   Rho           — spatial correlation, set directly
enum class SweepAxis { ClearSkySnrDb, MarginDb, DistanceKm, ThetaDb, Rho };

constexpr const char* axis_label(SweepAxis a) {
    switch (a) {
        case SweepAxis::ClearSkySnrDb: return "cs_snr_db";
        case SweepAxis::MarginDb:      return "margin_db";
        case SweepAxis::DistanceKm:    return "distance_km";
        case SweepAxis::ThetaDb:       return "theta_db";
        case SweepAxis::Rho:           return "rho";
    }
    return "?";
}

inline std::optional<SweepAxis> parse_axis(std::string_view s) {
    if (s == "cs" || s == "cs_snr_db")       return SweepAxis::ClearSkySnrDb;
    if (s == "margin" || s == "margin_db")   return SweepAxis::MarginDb;
    if (s == "distance" || s == "distance_km") return SweepAxis::DistanceKm;
    if (s == "theta" || s == "theta_db")     return SweepAxis::ThetaDb;
    if (s == "rho")                          return SweepAxis::Rho;
    return std::nullopt;
}

struct CurvePoint {
    double abscissa = 0.0;
    double outage = 0.0;
    // 95% binomial half-width for Monte Carlo points; NaN when analytic or
    // when the event count was too small for a trustworthy interval.
    double ci_halfwidth = std::numeric_limits<double>::quiet_NaN();
};

struct OutageCurve {
    switching::SchemeKind scheme = switching::SchemeKind::SC;
    Method method = Method::Analytic;
    SweepAxis axis = SweepAxis::MarginDb;
    std::vector<CurvePoint> points;
    // Metadata of the scenario the curve was computed from.
    double rho = 0.0;
    double separation_km = 0.0;
    double outage_thresh_db = 0.0;
    double switch_thresh_db = 0.0;

    // Probabilities in [0, 1], strictly monotone abscissa.
    void validate() const;
};

} // namespace gwdiv
