#include "gwdiv/scenario.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gwdiv/errors.hpp"

namespace gwdiv::scenario {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : allowed)
            if (item.key() == key) {
                known = true;
                break;
            }
        if (!known)
            throw ConfigError("scenario: unknown key '" + item.key() + "' in " + where);
    }
}

double require_number(const json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key))
        throw ConfigError("scenario: missing key '" + std::string(key) + "' in " + where);
    const auto& v = obj.at(key);
    if (!v.is_number())
        throw ConfigError("scenario: key '" + std::string(key) + "' in " + where +
                          " must be a number");
    return v.get<double>();
}

budget::BudgetEntry parse_budget(const json& obj, const std::string& where) {
    reject_unknown_keys(obj, {"eirp_dbw", "free_space_loss_db", "g_over_t_dbk",
                              "bandwidth_hz"},
                        where);
    budget::BudgetEntry entry;
    entry.eirp_dbw = require_number(obj, "eirp_dbw", where);
    entry.free_space_loss_db = require_number(obj, "free_space_loss_db", where);
    entry.g_over_t_dbk = require_number(obj, "g_over_t_dbk", where);
    entry.bandwidth_hz = require_number(obj, "bandwidth_hz", where);
    try {
        entry.validate();
    } catch (const std::domain_error& e) {
        throw ConfigError("scenario: " + where + ": " + e.what());
    }
    return entry;
}

} // namespace

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::string resolve_path(const std::string& name_or_path) {
    namespace fs = std::filesystem;
    if (fs::exists(name_or_path)) return name_or_path;

    if (name_or_path.find('/') == std::string::npos) {
        if (const char* dir = std::getenv("GWDIV_SCENARIO_DIR")) {
            const fs::path base(dir);
            for (const auto& candidate :
                 {base / name_or_path, base / (name_or_path + ".json")})
                if (fs::exists(candidate)) return candidate.string();
        }
    }
    throw ConfigError("scenario: cannot resolve '" + name_or_path +
                      "' (not a file, not found under GWDIV_SCENARIO_DIR)");
}

ScenarioFile parse(const std::string& json_text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError("scenario: invalid JSON in " + origin + ": " + e.what());
    }
    if (!doc.is_object()) throw ConfigError("scenario: top level must be an object");

    reject_unknown_keys(doc,
                        {"name", "description", "link", "geometry", "fade_ul",
                         "fade_dl", "sim", "budget_ul", "budget_dl"},
                        "top level");

    ScenarioFile out;
    out.source_path = origin;
    out.content_hash = fnv1a64(json_text);
    out.name = doc.value("name", std::string("unnamed"));
    out.description = doc.value("description", std::string());

    if (doc.contains("budget_ul"))
        out.budget_ul = parse_budget(doc.at("budget_ul"), "budget_ul");
    if (doc.contains("budget_dl"))
        out.budget_dl = parse_budget(doc.at("budget_dl"), "budget_dl");

    if (!doc.contains("link")) throw ConfigError("scenario: missing 'link' block");
    const json& link = doc.at("link");
    reject_unknown_keys(link,
                        {"cs_snr_ul_db", "cs_snr_dl_db", "outage_thresh_db",
                         "switch_thresh_db"},
                        "link");

    if (link.contains("cs_snr_ul_db"))
        out.link.cs_snr_ul_db = require_number(link, "cs_snr_ul_db", "link");
    else if (out.budget_ul)
        out.link.cs_snr_ul_db = budget::clear_sky_snr(*out.budget_ul);
    else
        throw ConfigError("scenario: need link.cs_snr_ul_db or a budget_ul block");

    if (link.contains("cs_snr_dl_db"))
        out.link.cs_snr_dl_db = require_number(link, "cs_snr_dl_db", "link");
    else if (out.budget_dl)
        out.link.cs_snr_dl_db = budget::clear_sky_snr(*out.budget_dl);
    else
        throw ConfigError("scenario: need link.cs_snr_dl_db or a budget_dl block");

    out.link.outage_thresh_db = require_number(link, "outage_thresh_db", "link");
    out.link.switch_thresh_db =
        link.contains("switch_thresh_db")
            ? require_number(link, "switch_thresh_db", "link")
            : out.link.outage_thresh_db; // default theta = gamma_th

    if (!doc.contains("geometry")) throw ConfigError("scenario: missing 'geometry' block");
    const json& geo = doc.at("geometry");
    reject_unknown_keys(geo, {"separation_km"}, "geometry");
    out.link.separation_km = require_number(geo, "separation_km", "geometry");

    if (!doc.contains("fade_ul")) throw ConfigError("scenario: missing 'fade_ul' block");
    const json& ful = doc.at("fade_ul");
    reject_unknown_keys(ful, {"m1", "m2", "s1", "s2", "rho"}, "fade_ul");
    out.link.fade_ul.m1 = require_number(ful, "m1", "fade_ul");
    out.link.fade_ul.m2 = require_number(ful, "m2", "fade_ul");
    out.link.fade_ul.s1 = require_number(ful, "s1", "fade_ul");
    out.link.fade_ul.s2 = require_number(ful, "s2", "fade_ul");
    if (ful.contains("rho")) {
        out.link.fade_ul.rho = require_number(ful, "rho", "fade_ul");
        out.rho_overridden = true;
    } else {
        try {
            out.link.fade_ul.rho =
                channel::correlation_from_distance(out.link.separation_km);
        } catch (const std::domain_error& e) {
            throw ConfigError(std::string("scenario: geometry: ") + e.what());
        }
    }

    if (!doc.contains("fade_dl")) throw ConfigError("scenario: missing 'fade_dl' block");
    const json& fdl = doc.at("fade_dl");
    reject_unknown_keys(fdl, {"m", "s"}, "fade_dl");
    out.link.fade_dl.m = require_number(fdl, "m", "fade_dl");
    out.link.fade_dl.s = require_number(fdl, "s", "fade_dl");

    if (doc.contains("sim")) {
        const json& sim = doc.at("sim");
        reject_unknown_keys(sim, {"slots", "seed", "workers", "burn_in"}, "sim");
        if (sim.contains("slots"))
            out.sim.slots = sim.at("slots").get<std::uint64_t>();
        if (sim.contains("seed")) out.sim.seed = sim.at("seed").get<std::uint64_t>();
        if (sim.contains("workers"))
            out.sim.workers = sim.at("workers").get<unsigned>();
        if (sim.contains("burn_in"))
            out.sim.burn_in = sim.at("burn_in").get<std::uint64_t>();
    }

    try {
        out.link.validate();
    } catch (const std::domain_error& e) {
        throw ConfigError(std::string("scenario: invalid link parameters: ") + e.what());
    }
    return out;
}

ScenarioFile load(const std::string& name_or_path) {
    const std::string path = resolve_path(name_or_path);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("scenario: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    ScenarioFile out = parse(buf.str(), path);
    out.source_path = path;
    return out;
}

} // namespace gwdiv::scenario
