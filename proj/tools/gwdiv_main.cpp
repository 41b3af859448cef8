// gwdiv: gateway-diversity outage and switching experiments from scenario
// files. Subcommands: outage | e2e | switching | budget | validate.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gwdiv/analytic.hpp"
#include "gwdiv/errors.hpp"
#include "gwdiv/link_budget.hpp"
#include "gwdiv/scenario.hpp"
#include "gwdiv/simulation.hpp"
#include "gwdiv/switching.hpp"
#include "gwdiv/version.hpp"

namespace {

using gwdiv::ConfigError;
using gwdiv::Method;
using gwdiv::NumericalError;
using gwdiv::SweepAxis;
using gwdiv::switching::SchemeKind;

struct CommonOpts {
    std::string scenario_ref = "default";
    std::string out_path;            // empty = stdout
    bool no_timestamp = false;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> slots;
    std::optional<unsigned> workers;
    std::optional<std::uint64_t> burn_in;
};

struct SweepOpts {
    std::string axis = "margin";
    std::optional<double> start, stop, step;
    std::optional<std::string> values_csv;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--scenario", o.scenario_ref,
                    "Scenario file path or bundled name (GWDIV_SCENARIO_DIR)");
    cmd->add_option("--out", o.out_path, "Output file (default: stdout)");
    cmd->add_flag("--no-timestamp", o.no_timestamp,
                  "Suppress the timestamp metadata line");
    cmd->add_option("--seed", o.seed, "Master RNG seed (overrides scenario)");
    cmd->add_option("--slots", o.slots, "Monte Carlo slots (overrides scenario)");
    cmd->add_option("--workers", o.workers, "Worker threads (overrides scenario)");
    cmd->add_option("--burn-in", o.burn_in, "Warm-up slots (overrides scenario)");
}

void add_sweep(CLI::App* cmd, SweepOpts& o, const char* default_axis) {
    o.axis = default_axis;
    cmd->add_option("--sweep", o.axis, "Sweep axis: margin|cs|distance|theta|rho");
    cmd->add_option("--start", o.start, "Sweep start value");
    cmd->add_option("--stop", o.stop, "Sweep stop value (inclusive)");
    cmd->add_option("--step", o.step, "Sweep step (> 0)");
    cmd->add_option("--values", o.values_csv, "Explicit comma-separated sweep values");
}

gwdiv::sim::SimConfig make_sim_config(const gwdiv::scenario::ScenarioFile& sf,
                                      const CommonOpts& o, SchemeKind scheme,
                                      bool e2e) {
    gwdiv::sim::SimConfig cfg;
    cfg.scenario = sf.link;
    cfg.scheme = scheme;
    cfg.slots = o.slots.value_or(sf.sim.slots);
    cfg.seed = o.seed.value_or(sf.sim.seed);
    cfg.workers = o.workers.value_or(sf.sim.workers);
    cfg.burn_in = o.burn_in.value_or(sf.sim.burn_in);
    cfg.e2e = e2e;
    return cfg;
}

std::vector<double> build_sweep_values(const SweepOpts& o, double fallback) {
    std::vector<double> values;
    if (!o.values_csv.empty()) {
        std::stringstream ss(o.values_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            try {
                values.push_back(std::stod(tok));
            } catch (const std::exception&) {
                throw ConfigError("sweep: cannot parse value '" + tok + "'");
            }
        }
    } else if (o.start || o.stop || o.step) {
        if (!(o.start && o.stop && o.step))
            throw ConfigError("sweep: --start, --stop and --step must be given together");
        if (!(*o.step > 0.0)) throw ConfigError("sweep: --step must be > 0");
        for (double v = *o.start; v <= *o.stop + 1e-9 * std::abs(*o.step); v += *o.step)
            values.push_back(v);
    } else {
        values.push_back(fallback);
    }
    if (values.empty()) throw ConfigError("sweep: empty value range");
    for (std::size_t i = 1; i < values.size(); ++i)
        if (!(values[i - 1] < values[i]))
            throw ConfigError("sweep: values must be strictly increasing");
    return values;
}

double axis_fallback(SweepAxis axis, const gwdiv::analytic::LinkScenario& sc) {
    switch (axis) {
        case SweepAxis::ClearSkySnrDb: return sc.cs_snr_ul_db;
        case SweepAxis::MarginDb:      return sc.uplink_margin_db();
        case SweepAxis::DistanceKm:    return sc.separation_km;
        case SweepAxis::ThetaDb:       return sc.switch_thresh_db;
        case SweepAxis::Rho:           return sc.fade_ul.rho;
    }
    return 0.0;
}

Method parse_method_or_throw(const std::string& s, bool& with_mc, bool& with_analytic) {
    if (s == "analytic") { with_analytic = true; with_mc = false; return Method::Analytic; }
    if (s == "mc")       { with_analytic = false; with_mc = true; return Method::MonteCarlo; }
    if (s == "both")     { with_analytic = true; with_mc = true; return Method::Analytic; }
    throw ConfigError("method must be one of analytic|mc|both, got '" + s + "'");
}

SchemeKind parse_scheme_or_throw(const std::string& s) {
    if (auto k = gwdiv::switching::parse_scheme(s)) return *k;
    throw ConfigError("unknown scheme '" + s + "' (mssc|ssc|sc|single|mrc)");
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw ConfigError("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void write_metadata(std::ostream& os, const gwdiv::scenario::ScenarioFile& sf,
                    const gwdiv::sim::SimConfig& cfg, const CommonOpts& o,
                    const std::string& extra) {
    char hash[20];
    std::snprintf(hash, sizeof hash, "%016llx",
                  static_cast<unsigned long long>(sf.content_hash));
    os << "# gwdiv " << gwdiv::kVersion << "\n";
    os << "# scenario " << sf.name << " hash " << hash << "\n";
    os << "# seed " << cfg.seed << " slots " << cfg.slots << " workers "
       << cfg.workers << "\n";
    if (!extra.empty()) os << "# " << extra << "\n";
    if (!o.no_timestamp) {
        const std::time_t now = std::chrono::system_clock::to_time_t(
            std::chrono::system_clock::now());
        char stamp[32];
        std::strftime(stamp, sizeof stamp, "%FT%TZ", std::gmtime(&now));
        os << "# generated " << stamp << "\n";
    }
}

int run_outage(const CommonOpts& o, const SweepOpts& sw, const std::string& scheme_s,
               const std::string& method_s, bool e2e_mode) {
    const auto sf = gwdiv::scenario::load(o.scenario_ref);
    const SchemeKind scheme = parse_scheme_or_throw(scheme_s);
    bool with_mc = false, with_analytic = false;
    parse_method_or_throw(method_s, with_mc, with_analytic);

    const auto axis = gwdiv::parse_axis(sw.axis);
    if (!axis) throw ConfigError("unknown sweep axis '" + sw.axis + "'");
    const auto values = build_sweep_values(sw, axis_fallback(*axis, sf.link));

    const bool analytic_supported =
        scheme == SchemeKind::SC || scheme == SchemeKind::MSSC ||
        scheme == SchemeKind::Single;
    if (with_analytic && !analytic_supported)
        throw ConfigError(std::string("scheme '") + to_string(scheme) +
                          "' has no analytic outage form; use --method mc");

    auto cfg = make_sim_config(sf, o, scheme, e2e_mode);
    if (e2e_mode && scheme == SchemeKind::MSSC) {
        // The e2e analysis is built on the SC-equivalent uplink law, valid
        // for MSSC only at theta = gamma_th; the Monte Carlo column then runs
        // the SC selection machine (identical outage law at the threshold).
        for (double v : values) {
            const auto point = gwdiv::analytic::apply_axis(sf.link, *axis, v);
            if (point.switch_thresh_db != point.outage_thresh_db)
                throw ConfigError("e2e with scheme mssc requires theta = gamma_th "
                                  "at every sweep point");
        }
        cfg.scheme = SchemeKind::SC;
    }

    std::vector<double> analytic_ul(values.size(),
                                    std::numeric_limits<double>::quiet_NaN());
    std::vector<double> analytic_e2e(values.size(),
                                     std::numeric_limits<double>::quiet_NaN());
    std::vector<double> regen(values.size(),
                              std::numeric_limits<double>::quiet_NaN());
    if (with_analytic) {
        const auto kind = scheme == SchemeKind::Single
                              ? gwdiv::analytic::UplinkKind::Single
                              : gwdiv::analytic::UplinkKind::Diversity;
        for (std::size_t i = 0; i < values.size(); ++i) {
            const auto point = gwdiv::analytic::apply_axis(sf.link, *axis, values[i]);
            analytic_ul[i] = gwdiv::analytic::uplink_outage(point, scheme);
            if (e2e_mode) {
                if (scheme == SchemeKind::MSSC &&
                    point.switch_thresh_db != point.outage_thresh_db)
                    throw ConfigError("analytic end-to-end outage requires "
                                      "theta = gamma_th for the MSSC scheme");
                analytic_e2e[i] = gwdiv::analytic::e2e_outage(point, kind);
                regen[i] = gwdiv::analytic::regenerative_bound(point, kind);
            }
        }
    }

    std::optional<gwdiv::OutageCurve> mc;
    if (with_mc) mc = gwdiv::sim::sweep(cfg, *axis, values);

    Output out(o.out_path);
    auto& os = out.stream();
    write_metadata(os, sf, cfg, o,
                   std::string("axis ") + gwdiv::axis_label(*axis) + " scheme " +
                       to_string(scheme) + " rho " + fmt(sf.link.fade_ul.rho) +
                       " gamma_th_db " + fmt(sf.link.outage_thresh_db) +
                       " theta_db " + fmt(sf.link.switch_thresh_db));
    os << "abscissa,outage_analytic,outage_mc,ci_halfwidth,scheme,rho";
    if (e2e_mode) os << ",e2e_outage,regenerative_bound";
    os << "\n";
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double mc_est =
            mc ? mc->points[i].outage : std::numeric_limits<double>::quiet_NaN();
        const double mc_ci =
            mc ? mc->points[i].ci_halfwidth : std::numeric_limits<double>::quiet_NaN();
        const auto point = gwdiv::analytic::apply_axis(sf.link, *axis, values[i]);
        os << fmt(values[i]) << ',' << fmt(analytic_ul[i]) << ',' << fmt(mc_est)
           << ',' << fmt(mc_ci) << ',' << to_string(scheme) << ','
           << fmt(point.fade_ul.rho);
        if (e2e_mode) os << ',' << fmt(analytic_e2e[i]) << ',' << fmt(regen[i]);
        os << "\n";
    }
    return 0;
}

int run_switching(const CommonOpts& o, const SweepOpts& sw, const std::string& method_s,
                  double slot_seconds) {
    const auto sf = gwdiv::scenario::load(o.scenario_ref);
    bool with_mc = false, with_analytic = false;
    parse_method_or_throw(method_s, with_mc, with_analytic);

    const auto axis = gwdiv::parse_axis(sw.axis);
    if (!axis) throw ConfigError("unknown sweep axis '" + sw.axis + "'");
    if (*axis != SweepAxis::ThetaDb)
        throw ConfigError("switching sweeps run over the theta axis");

    SweepOpts sweep = sw;
    if (sweep.values_csv.empty() && !sweep.start) {
        // Default: gamma_th +/- 6 dB in 0.5 dB steps.
        sweep.start = sf.link.outage_thresh_db - 6.0;
        sweep.stop = sf.link.outage_thresh_db + 6.0;
        sweep.step = 0.5;
    }
    const auto values = build_sweep_values(sweep, sf.link.switch_thresh_db);

    auto cfg = make_sim_config(sf, o, SchemeKind::MSSC, false);

    Output out(o.out_path);
    auto& os = out.stream();
    write_metadata(os, sf, cfg, o,
                   std::string("axis theta_db slot_seconds ") + fmt(slot_seconds));
    os << "theta_db,p,p12,p_sw_mssc,p_sw_ssc,p_sw_sc,r_sw_mssc";
    if (with_mc)
        os << ",mc_sw_mssc,mc_ci_mssc,mc_sw_ssc,mc_ci_ssc,mc_sw_sc,mc_ci_sc";
    os << "\n";

    const SchemeKind sim_schemes[3] = {SchemeKind::MSSC, SchemeKind::SSC,
                                       SchemeKind::SC};
    for (std::size_t i = 0; i < values.size(); ++i) {
        const auto point =
            gwdiv::analytic::apply_axis(sf.link, SweepAxis::ThetaDb, values[i]);
        const auto summary = gwdiv::switching::switching_summary(point, slot_seconds);
        os << fmt(values[i]) << ',' << fmt(summary.p) << ',' << fmt(summary.p12)
           << ',' << fmt(summary.switch_prob) << ',' << fmt(summary.switch_prob_ssc)
           << ',' << fmt(summary.switch_prob_sc) << ',' << fmt(summary.switch_rate);
        if (with_mc) {
            for (int s = 0; s < 3; ++s) {
                auto point_cfg = cfg;
                point_cfg.scenario = point;
                point_cfg.scheme = sim_schemes[s];
                const auto rep =
                    gwdiv::sim::run(point_cfg, 3 * i + static_cast<unsigned>(s));
                os << ',' << fmt(rep.switch_prob_est) << ','
                   << fmt(rep.switch_ci_halfwidth);
            }
        }
        os << "\n";
    }
    return 0;
}

int run_budget(const CommonOpts& o) {
    const auto sf = gwdiv::scenario::load(o.scenario_ref);
    if (!sf.budget_ul && !sf.budget_dl)
        throw ConfigError("scenario '" + sf.name + "' has no budget blocks");

    Output out(o.out_path);
    auto& os = out.stream();
    os << "scenario " << sf.name << "\n";
    if (sf.budget_ul)
        os << "uplink clear-sky SNR: " << fmt(gwdiv::budget::clear_sky_snr(*sf.budget_ul))
           << " dB (scenario link value " << fmt(sf.link.cs_snr_ul_db) << " dB)\n";
    if (sf.budget_dl)
        os << "downlink clear-sky SNR: "
           << fmt(gwdiv::budget::clear_sky_snr(*sf.budget_dl))
           << " dB (scenario link value " << fmt(sf.link.cs_snr_dl_db) << " dB)\n";
    return 0;
}

int run_validate(const CommonOpts& o) {
    const auto sf = gwdiv::scenario::load(o.scenario_ref);
    char hash[20];
    std::snprintf(hash, sizeof hash, "%016llx",
                  static_cast<unsigned long long>(sf.content_hash));
    std::cout << "ok: " << sf.source_path << "\n"
              << "  name: " << sf.name << " (hash " << hash << ")\n"
              << "  cs_snr_ul_db: " << fmt(sf.link.cs_snr_ul_db)
              << "  cs_snr_dl_db: " << fmt(sf.link.cs_snr_dl_db) << "\n"
              << "  gamma_th_db: " << fmt(sf.link.outage_thresh_db)
              << "  theta_db: " << fmt(sf.link.switch_thresh_db) << "\n"
              << "  separation_km: " << fmt(sf.link.separation_km)
              << "  rho: " << fmt(sf.link.fade_ul.rho)
              << (sf.rho_overridden ? " (file override)" : " (from distance)") << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gateway-diversity outage and switching analysis"};
    app.require_subcommand(1);

    CommonOpts common;
    SweepOpts sweep;
    std::string scheme = "sc";
    std::string method = "analytic";
    std::string sw_method = "both";
    double slot_seconds = 1.0;

    auto* outage = app.add_subcommand("outage", "Feeder-uplink outage curves");
    add_common(outage, common);
    add_sweep(outage, sweep, "margin");
    outage->add_option("--scheme", scheme, "mssc|ssc|sc|single|mrc");
    outage->add_option("--method", method, "analytic|mc|both");

    auto* e2e = app.add_subcommand("e2e", "End-to-end transparent-link outage curves");
    add_common(e2e, common);
    add_sweep(e2e, sweep, "margin");
    e2e->add_option("--scheme", scheme, "mssc|sc|single (mrc/ssc: --method mc)");
    e2e->add_option("--method", method, "analytic|mc|both");

    auto* sw = app.add_subcommand("switching", "Switching probability and rate vs theta");
    add_common(sw, common);
    add_sweep(sw, sweep, "theta");
    sw->add_option("--method", sw_method, "analytic|mc|both");
    sw->add_option("--slot-seconds", slot_seconds, "Slot duration T in seconds");

    auto* budget = app.add_subcommand("budget", "Clear-sky SNR from the budget blocks");
    add_common(budget, common);

    auto* validate = app.add_subcommand("validate", "Parse and validate a scenario file");
    add_common(validate, common);

    try {
        app.parse(argc, argv);
        if (outage->parsed()) return run_outage(common, sweep, scheme, method, false);
        if (e2e->parsed()) return run_outage(common, sweep, scheme, method, true);
        if (sw->parsed()) return run_switching(common, sweep, sw_method, slot_seconds);
        if (budget->parsed()) return run_budget(common);
        if (validate->parsed()) return run_validate(common);
        return 2;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
