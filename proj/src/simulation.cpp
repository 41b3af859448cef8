#include "gwdiv/simulation.hpp"

#include <chrono>
#include <cmath>
#include <thread>
#include <vector>

#include "gwdiv/errors.hpp"
#include "gwdiv/rng.hpp"

namespace gwdiv::sim {

namespace {

constexpr double kLn10Over10 = 0.23025850929940457;

struct WorkerCounts {
    std::uint64_t outage = 0;
    std::uint64_t switches = 0;
};

struct SlotParams {
    double m1, s1, m2, s2, rho, chol;
    double mg, sg;
    double cs_ul_lin, cs_dl_lin;
    double theta_lin, gth_lin;
    switching::SchemeKind scheme;
    bool e2e;
};

WorkerCounts run_worker(const SlotParams& p, rng::Stream stream,
                        std::uint64_t burn_in, std::uint64_t counted) {
    WorkerCounts counts;
    int active = 1;
    const std::uint64_t total = burn_in + counted;
    for (std::uint64_t i = 0; i < total; ++i) {
        const double z1 = stream.next_normal();
        const double z2 = p.rho * z1 + p.chol * stream.next_normal();
        const double a1 = std::exp(p.m1 + p.s1 * z1);
        const double a2 = std::exp(p.m2 + p.s2 * z2);
        const double snr1 = p.cs_ul_lin * std::exp(-kLn10Over10 * a1);
        const double snr2 = p.cs_ul_lin * std::exp(-kLn10Over10 * a2);

        const auto res = switching::step(p.scheme, active, snr1, snr2, p.theta_lin);
        active = res.active;

        double snr = res.selected_snr;
        if (p.e2e) {
            const double ag = std::exp(p.mg + p.sg * stream.next_normal());
            const double gg = p.cs_dl_lin * std::exp(-kLn10Over10 * ag);
            snr = gg * snr / (gg + snr + 1.0);
        }
        if (i >= burn_in) {
            counts.outage += snr < p.gth_lin;
            counts.switches += res.switched;
        }
    }
    return counts;
}

// 95% binomial half-width; NaN (flagged unreliable) below 10 events.
void fill_estimate(std::uint64_t count, std::uint64_t n, double& est, double& ci,
                   bool& reliable) {
    est = static_cast<double>(count) / static_cast<double>(n);
    reliable = count >= 10;
    ci = reliable ? 1.96 * std::sqrt(est * (1.0 - est) / static_cast<double>(n))
                  : std::numeric_limits<double>::quiet_NaN();
}

} // namespace

void SimConfig::validate() const {
    scenario.validate();
    if (slots < 1000) throw ConfigError("sim config: slots must be >= 1000");
    if (workers < 1) throw ConfigError("sim config: workers must be >= 1");
    if (burn_in >= slots) throw ConfigError("sim config: burn_in must be < slots");
}

SimReport run(const SimConfig& cfg, std::uint64_t stream_block) {
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();

    SlotParams p;
    p.m1 = cfg.scenario.fade_ul.m1;
    p.s1 = cfg.scenario.fade_ul.s1;
    p.m2 = cfg.scenario.fade_ul.m2;
    p.s2 = cfg.scenario.fade_ul.s2;
    p.rho = cfg.scenario.fade_ul.rho;
    p.chol = std::sqrt(std::max(0.0, 1.0 - p.rho * p.rho));
    p.mg = cfg.scenario.fade_dl.m;
    p.sg = cfg.scenario.fade_dl.s;
    p.cs_ul_lin = std::exp(kLn10Over10 * cfg.scenario.cs_snr_ul_db);
    p.cs_dl_lin = std::exp(kLn10Over10 * cfg.scenario.cs_snr_dl_db);
    p.theta_lin = std::exp(kLn10Over10 * cfg.scenario.switch_thresh_db);
    p.gth_lin = std::exp(kLn10Over10 * cfg.scenario.outage_thresh_db);
    p.scheme = cfg.scheme;
    p.e2e = cfg.e2e;

    // Per-point block via long_jump, per-worker stream via jump.
    rng::Stream base(cfg.seed);
    for (std::uint64_t i = 0; i < stream_block; ++i) base.long_jump();

    const unsigned workers = cfg.workers;
    std::vector<WorkerCounts> counts(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t share =
            cfg.slots / workers + (w < cfg.slots % workers ? 1 : 0);
        rng::Stream stream = base;
        for (unsigned j = 0; j < w; ++j) stream.jump();
        if (workers == 1) {
            counts[w] = run_worker(p, stream, cfg.burn_in, share);
        } else {
            pool.emplace_back([&counts, w, p, stream, burn = cfg.burn_in, share] {
                counts[w] = run_worker(p, stream, burn, share);
            });
        }
    }
    for (auto& t : pool) t.join();

    std::uint64_t outage = 0, switches = 0;
    for (const auto& c : counts) {
        outage += c.outage;
        switches += c.switches;
    }

    SimReport rep;
    rep.slots_used = cfg.slots;
    rep.seed = cfg.seed;
    fill_estimate(outage, cfg.slots, rep.outage_est, rep.outage_ci_halfwidth,
                  rep.outage_reliable);
    fill_estimate(switches, cfg.slots, rep.switch_prob_est, rep.switch_ci_halfwidth,
                  rep.switch_reliable);
    rep.wall_time_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
    return rep;
}

OutageCurve sweep(const SimConfig& cfg, SweepAxis axis, std::span<const double> values) {
    if (values.empty()) throw ConfigError("sweep: empty value list");
    for (std::size_t i = 1; i < values.size(); ++i)
        if (!(values[i - 1] < values[i]))
            throw ConfigError("sweep: values must be strictly increasing");

    OutageCurve curve;
    curve.scheme = cfg.scheme;
    curve.method = Method::MonteCarlo;
    curve.axis = axis;
    curve.rho = cfg.scenario.fade_ul.rho;
    curve.separation_km = cfg.scenario.separation_km;
    curve.outage_thresh_db = cfg.scenario.outage_thresh_db;
    curve.switch_thresh_db = cfg.scenario.switch_thresh_db;
    curve.points.reserve(values.size());

    for (std::size_t i = 0; i < values.size(); ++i) {
        SimConfig point_cfg = cfg;
        point_cfg.scenario = analytic::apply_axis(cfg.scenario, axis, values[i]);
        const SimReport rep = run(point_cfg, i);
        CurvePoint pt;
        pt.abscissa = values[i];
        pt.outage = rep.outage_est;
        pt.ci_halfwidth = rep.outage_ci_halfwidth;
        curve.points.push_back(pt);
    }
    curve.validate();
    return curve;
}

} // namespace gwdiv::sim
