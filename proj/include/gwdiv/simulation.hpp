#pragma once

#include <cstdint>
#include <span>

#include "gwdiv/analytic.hpp"
#include "gwdiv/switching.hpp"

namespace gwdiv::sim {

struct SimConfig {
    analytic::LinkScenario scenario;
    switching::SchemeKind scheme = switching::SchemeKind::MSSC;
    std::uint64_t slots = 1'000'000;
    std::uint64_t seed = 1;
    unsigned workers = 1;
    std::uint64_t burn_in = 10'000;
    bool e2e = false; // include the downlink draw and gamma_eq

    void validate() const; // throws ConfigError
};

struct SimReport {
    double outage_est = 0.0;
    double outage_ci_halfwidth = 0.0;
    double switch_prob_est = 0.0;
    double switch_ci_halfwidth = 0.0;
    // CI half-widths are 1.96 sqrt(p(1-p)/n); with fewer than 10 events the
    // half-width is NaN and the flag below is cleared instead.
    bool outage_reliable = false;
    bool switch_reliable = false;
    std::uint64_t slots_used = 0;
    std::uint64_t seed = 0;
    double wall_time_ms = 0.0;
};

// Slot-by-slot Monte Carlo of one scheme. Slots are partitioned across
// workers; worker w draws from the master stream jumped w times, so the
// report is bit-identical for a fixed (seed, slots, workers) triple.
// stream_block selects the long-jump block (used by sweep for per-point
// streams; block 0 is the plain run).
SimReport run(const SimConfig& cfg, std::uint64_t stream_block = 0);

// One run per value (strictly monotone, non-empty), per-point derived
// streams off the shared master seed.
OutageCurve sweep(const SimConfig& cfg, SweepAxis axis, std::span<const double> values);

} // namespace gwdiv::sim
