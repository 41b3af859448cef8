#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gwdiv/analytic.hpp"
#include "gwdiv/channel_model.hpp"
#include "gwdiv/errors.hpp"
#include "gwdiv/link_budget.hpp"
#include "gwdiv/scenario.hpp"
#include "gwdiv/simulation.hpp"
#include "gwdiv/switching.hpp"
#include "gwdiv/version.hpp"

namespace py = pybind11;

using namespace gwdiv;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Gateway-diversity outage and switching analysis for Q/V-band "
              "feeder links under correlated lognormal rain fading";
    m.attr("__version__") = kVersion;

    py::register_exception<ConfigError>(m, "ConfigError");
    py::register_exception<NumericalError>(m, "NumericalError");

    // channel model
    py::class_<channel::LognormalParams>(m, "LognormalParams")
        .def(py::init<double, double>(), py::arg("m") = 0.0, py::arg("s") = 1.0)
        .def_readwrite("m", &channel::LognormalParams::m)
        .def_readwrite("s", &channel::LognormalParams::s);

    py::class_<channel::RainFadeParams>(m, "RainFadeParams")
        .def(py::init([](double m1, double m2, double s1, double s2, double rho) {
                 channel::RainFadeParams p{m1, m2, s1, s2, rho};
                 p.validate();
                 return p;
             }),
             py::arg("m1") = 0.0, py::arg("m2") = 0.0, py::arg("s1") = 1.0,
             py::arg("s2") = 1.0, py::arg("rho") = 0.0)
        .def_readwrite("m1", &channel::RainFadeParams::m1)
        .def_readwrite("m2", &channel::RainFadeParams::m2)
        .def_readwrite("s1", &channel::RainFadeParams::s1)
        .def_readwrite("s2", &channel::RainFadeParams::s2)
        .def_readwrite("rho", &channel::RainFadeParams::rho);

    m.def("correlation_from_distance", &channel::correlation_from_distance,
          py::arg("separation_km"),
          "Spatial correlation 0.94 exp(-D/30) + 0.06 exp(-(D/500)^2)");
    m.def("attenuation_db_to_gain", &channel::attenuation_db_to_gain, py::arg("a_db"));
    m.def("marginal_exceed_prob", &channel::marginal_exceed_prob, py::arg("params"),
          py::arg("site"), py::arg("a_db"), "Pr{A_site > a_db}");
    m.def("joint_exceed_prob", &channel::joint_exceed_prob, py::arg("params"),
          py::arg("a1_db"), py::arg("a2_db"), "Pr{A1 > a1_db, A2 > a2_db}");

    // link scenario and analytic outage
    py::class_<analytic::LinkScenario>(m, "LinkScenario")
        .def(py::init<>())
        .def_readwrite("cs_snr_ul_db", &analytic::LinkScenario::cs_snr_ul_db)
        .def_readwrite("cs_snr_dl_db", &analytic::LinkScenario::cs_snr_dl_db)
        .def_readwrite("outage_thresh_db", &analytic::LinkScenario::outage_thresh_db)
        .def_readwrite("switch_thresh_db", &analytic::LinkScenario::switch_thresh_db)
        .def_readwrite("fade_ul", &analytic::LinkScenario::fade_ul)
        .def_readwrite("fade_dl", &analytic::LinkScenario::fade_dl)
        .def_readwrite("separation_km", &analytic::LinkScenario::separation_km)
        .def("uplink_margin_db", &analytic::LinkScenario::uplink_margin_db);

    py::enum_<analytic::UplinkKind>(m, "UplinkKind")
        .value("Diversity", analytic::UplinkKind::Diversity)
        .value("Single", analytic::UplinkKind::Single);

    m.def("uplink_outage_sc", &analytic::uplink_outage_sc, py::arg("scenario"));
    m.def("uplink_outage_mssc", &analytic::uplink_outage_mssc, py::arg("scenario"));
    m.def("uplink_outage_single", &analytic::uplink_outage_single, py::arg("scenario"));
    m.def("downlink_outage", &analytic::downlink_outage, py::arg("scenario"));
    m.def("downlink_snr_pdf", &analytic::downlink_snr_pdf, py::arg("scenario"),
          py::arg("gamma_g"));
    m.def("e2e_outage", &analytic::e2e_outage, py::arg("scenario"),
          py::arg("uplink") = analytic::UplinkKind::Diversity);
    m.def("regenerative_bound", &analytic::regenerative_bound, py::arg("scenario"),
          py::arg("uplink") = analytic::UplinkKind::Diversity);

    // switching
    py::enum_<switching::SchemeKind>(m, "SchemeKind")
        .value("MSSC", switching::SchemeKind::MSSC)
        .value("SSC", switching::SchemeKind::SSC)
        .value("SC", switching::SchemeKind::SC)
        .value("Single", switching::SchemeKind::Single)
        .value("MRC", switching::SchemeKind::MRC);

    py::class_<switching::StepResult>(m, "StepResult")
        .def_readonly("active", &switching::StepResult::active)
        .def_readonly("switched", &switching::StepResult::switched)
        .def_readonly("selected_snr", &switching::StepResult::selected_snr);

    py::class_<switching::SwitchState>(m, "SwitchState")
        .def_readonly("state_id", &switching::SwitchState::state_id)
        .def_readonly("active_gw", &switching::SwitchState::active_gw);

    m.def("step", &switching::step, py::arg("scheme"), py::arg("prev_active"),
          py::arg("snr1"), py::arg("snr2"), py::arg("theta"));
    m.def("classify_state", &switching::classify_state, py::arg("prev_active"),
          py::arg("snr1"), py::arg("snr2"), py::arg("theta"));
    m.def("transition_matrix", &switching::transition_matrix, py::arg("p"),
          py::arg("p12"));
    m.def("stationary_distribution", &switching::stationary_distribution,
          py::arg("matrix"), py::arg("tol") = 1e-12);

    py::class_<switching::MarkovSummary>(m, "MarkovSummary")
        .def_readonly("p", &switching::MarkovSummary::p)
        .def_readonly("p12", &switching::MarkovSummary::p12)
        .def_readonly("stationary", &switching::MarkovSummary::stationary)
        .def_readonly("switch_prob", &switching::MarkovSummary::switch_prob)
        .def_readonly("switch_rate", &switching::MarkovSummary::switch_rate)
        .def_readonly("switch_prob_ssc", &switching::MarkovSummary::switch_prob_ssc)
        .def_readonly("switch_prob_sc", &switching::MarkovSummary::switch_prob_sc)
        .def_readonly("slot_seconds", &switching::MarkovSummary::slot_seconds);

    m.def("switching_summary", &switching::switching_summary, py::arg("scenario"),
          py::arg("slot_seconds") = 1.0);

    // simulation
    py::class_<sim::SimConfig>(m, "SimConfig")
        .def(py::init<>())
        .def_readwrite("scenario", &sim::SimConfig::scenario)
        .def_readwrite("scheme", &sim::SimConfig::scheme)
        .def_readwrite("slots", &sim::SimConfig::slots)
        .def_readwrite("seed", &sim::SimConfig::seed)
        .def_readwrite("workers", &sim::SimConfig::workers)
        .def_readwrite("burn_in", &sim::SimConfig::burn_in)
        .def_readwrite("e2e", &sim::SimConfig::e2e);

    py::class_<sim::SimReport>(m, "SimReport")
        .def_readonly("outage_est", &sim::SimReport::outage_est)
        .def_readonly("outage_ci_halfwidth", &sim::SimReport::outage_ci_halfwidth)
        .def_readonly("switch_prob_est", &sim::SimReport::switch_prob_est)
        .def_readonly("switch_ci_halfwidth", &sim::SimReport::switch_ci_halfwidth)
        .def_readonly("outage_reliable", &sim::SimReport::outage_reliable)
        .def_readonly("switch_reliable", &sim::SimReport::switch_reliable)
        .def_readonly("slots_used", &sim::SimReport::slots_used)
        .def_readonly("seed", &sim::SimReport::seed)
        .def_readonly("wall_time_ms", &sim::SimReport::wall_time_ms);

    m.def(
        "run",
        [](const sim::SimConfig& cfg) {
            py::gil_scoped_release release;
            return sim::run(cfg);
        },
        py::arg("config"));

    py::enum_<SweepAxis>(m, "SweepAxis")
        .value("ClearSkySnrDb", SweepAxis::ClearSkySnrDb)
        .value("MarginDb", SweepAxis::MarginDb)
        .value("DistanceKm", SweepAxis::DistanceKm)
        .value("ThetaDb", SweepAxis::ThetaDb)
        .value("Rho", SweepAxis::Rho);

    py::enum_<Method>(m, "Method")
        .value("Analytic", Method::Analytic)
        .value("MonteCarlo", Method::MonteCarlo);

    py::class_<CurvePoint>(m, "CurvePoint")
        .def_readonly("abscissa", &CurvePoint::abscissa)
        .def_readonly("outage", &CurvePoint::outage)
        .def_readonly("ci_halfwidth", &CurvePoint::ci_halfwidth);

    py::class_<OutageCurve>(m, "OutageCurve")
        .def_readonly("scheme", &OutageCurve::scheme)
        .def_readonly("method", &OutageCurve::method)
        .def_readonly("axis", &OutageCurve::axis)
        .def_readonly("points", &OutageCurve::points)
        .def_readonly("rho", &OutageCurve::rho)
        .def_readonly("separation_km", &OutageCurve::separation_km)
        .def_readonly("outage_thresh_db", &OutageCurve::outage_thresh_db)
        .def_readonly("switch_thresh_db", &OutageCurve::switch_thresh_db);

    m.def(
        "sweep",
        [](const sim::SimConfig& cfg, SweepAxis axis, std::vector<double> values) {
            py::gil_scoped_release release;
            return sim::sweep(cfg, axis, values);
        },
        py::arg("config"), py::arg("axis"), py::arg("values"));

    m.def(
        "analytic_curve",
        [](const analytic::LinkScenario& sc, switching::SchemeKind scheme,
           SweepAxis axis, std::vector<double> values) {
            return analytic::outage_curve(sc, scheme, axis, values);
        },
        py::arg("scenario"), py::arg("scheme"), py::arg("axis"), py::arg("values"));

    m.def("apply_axis", &analytic::apply_axis, py::arg("scenario"), py::arg("axis"),
          py::arg("value"));

    // link budget
    py::class_<budget::BudgetEntry>(m, "BudgetEntry")
        .def(py::init([](double eirp, double fsl, double gt, double bw) {
                 budget::BudgetEntry e{eirp, fsl, gt, bw};
                 e.validate();
                 return e;
             }),
             py::arg("eirp_dbw"), py::arg("free_space_loss_db"),
             py::arg("g_over_t_dbk"), py::arg("bandwidth_hz"))
        .def_readwrite("eirp_dbw", &budget::BudgetEntry::eirp_dbw)
        .def_readwrite("free_space_loss_db", &budget::BudgetEntry::free_space_loss_db)
        .def_readwrite("g_over_t_dbk", &budget::BudgetEntry::g_over_t_dbk)
        .def_readwrite("bandwidth_hz", &budget::BudgetEntry::bandwidth_hz);

    m.def("clear_sky_snr", &budget::clear_sky_snr, py::arg("entry"));

    // scenario files
    py::class_<scenario::SimDefaults>(m, "SimDefaults")
        .def_readonly("slots", &scenario::SimDefaults::slots)
        .def_readonly("seed", &scenario::SimDefaults::seed)
        .def_readonly("workers", &scenario::SimDefaults::workers)
        .def_readonly("burn_in", &scenario::SimDefaults::burn_in);

    py::class_<scenario::ScenarioFile>(m, "ScenarioFile")
        .def_readonly("name", &scenario::ScenarioFile::name)
        .def_readonly("description", &scenario::ScenarioFile::description)
        .def_readonly("link", &scenario::ScenarioFile::link)
        .def_readonly("sim", &scenario::ScenarioFile::sim)
        .def_readonly("rho_overridden", &scenario::ScenarioFile::rho_overridden)
        .def_readonly("source_path", &scenario::ScenarioFile::source_path)
        .def_readonly("content_hash", &scenario::ScenarioFile::content_hash);

    m.def("load_scenario", &scenario::load, py::arg("name_or_path"));
}
