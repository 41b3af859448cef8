#pragma once

#include <optional>
#include <string_view>

namespace gwdiv::switching {

// Diversity strategies on the feeder uplink. MSSC switches to the idle
// gateway only when the active one drops below the threshold while the idle
// one is above it; SSC switches on any below-threshold slot; SC always runs
// the stronger gateway; MRC sums both branch SNRs (simulation baseline).
enum class SchemeKind { MSSC, SSC, SC, Single, MRC };

constexpr const char* to_string(SchemeKind k) {
    switch (k) {
        case SchemeKind::MSSC:   return "mssc";
        case SchemeKind::SSC:    return "ssc";
        case SchemeKind::SC:     return "sc";
        case SchemeKind::Single: return "single";
        case SchemeKind::MRC:    return "mrc";
    }
    return "?";
}

inline std::optional<SchemeKind> parse_scheme(std::string_view s) {
    if (s == "mssc")   return SchemeKind::MSSC;
    if (s == "ssc")    return SchemeKind::SSC;
    if (s == "sc")     return SchemeKind::SC;
    if (s == "single") return SchemeKind::Single;
    if (s == "mrc")    return SchemeKind::MRC;
    return std::nullopt;
}

} // namespace gwdiv::switching
