#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gwdiv/analytic.hpp"
#include "gwdiv/link_budget.hpp"

namespace gwdiv::scenario {

struct SimDefaults {
    std::uint64_t slots = 1'000'000;
    std::uint64_t seed = 1;
    unsigned workers = 1;
    std::uint64_t burn_in = 10'000;
};

// A parsed scenario document. The link is fully resolved: rho comes from the
// separation distance unless the file overrides it, and missing clear-sky
// SNRs are computed from the budget blocks when present.
struct ScenarioFile {
    std::string name;
    std::string description;
    analytic::LinkScenario link;
    SimDefaults sim;
    std::optional<budget::BudgetEntry> budget_ul;
    std::optional<budget::BudgetEntry> budget_dl;
    bool rho_overridden = false;
    std::string source_path;
    std::uint64_t content_hash = 0; // FNV-1a of the file bytes
};

// Resolve a name or path: an existing path wins; otherwise a bare name is
// looked up (with .json appended if needed) under $GWDIV_SCENARIO_DIR.
std::string resolve_path(const std::string& name_or_path);

// Parse scenario JSON; unknown keys are rejected. Throws ConfigError.
ScenarioFile parse(const std::string& json_text, const std::string& origin);

ScenarioFile load(const std::string& name_or_path);

std::uint64_t fnv1a64(const std::string& bytes);

} // namespace gwdiv::scenario
