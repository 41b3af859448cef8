#pragma once

#include <array>

#include "gwdiv/analytic.hpp"
#include "gwdiv/scheme.hpp"

namespace gwdiv::switching {

using Matrix6 = std::array<std::array<double, 6>, 6>;
using Vector6 = std::array<double, 6>;

// One Markov state of the MSSC process. States 1..6 follow the modelling
// table: 1/4 active gateway above threshold, 2/5 both in outage (no switch),
// 3/6 the switching states. The slot's signal source is gateway 1 in states
// 1, 2, 6 and gateway 2 in states 3, 4, 5.
struct SwitchState {
    int state_id = 1;  // 1..6
    int active_gw = 1; // gateway feeding this slot
};

// Classify the slot given the previously active gateway and both SNRs
// against theta (linear). Outage is the strict inequality snr < theta.
SwitchState classify_state(int prev_active, double snr1, double snr2, double theta);

struct StepResult {
    int active = 1;
    bool switched = false;
    double selected_snr = 0.0;
};

// One slot of a diversity scheme. MSSC switches iff the active branch is
// below theta and the idle one above; SSC switches whenever the active
// branch is below theta; SC tracks the larger SNR (ties keep the previous
// gateway); Single always uses gateway 1; MRC reports the branch sum and
// never switches.
StepResult step(SchemeKind scheme, int prev_active, double snr1, double snr2,
                double theta);

// The 6x6 transition matrix: rows 1,2,6 are [1-p, p12, p-p12, 0, 0, 0] and
// rows 3,4,5 are [0, 0, 0, 1-p, p12, p-p12]. Requires 0 <= p12 <= p <= 1.
Matrix6 transition_matrix(double p, double p12);

// Stationary pi = pi P by power iteration from the uniform vector.
Vector6 stationary_distribution(const Matrix6& m, double tol = 1e-12);

struct MarkovSummary {
    double p = 0.0;    // Pr{gamma_1 <= theta}
    double p12 = 0.0;  // Pr{gamma_1 <= theta, gamma_2 <= theta}
    Vector6 stationary{};
    double switch_prob = 0.0;     // MSSC: pi3 + pi6 = p - p12
    double switch_rate = 0.0;     // switch_prob / slot_seconds
    double switch_prob_ssc = 0.0; // = p
    double switch_prob_sc = 0.5;  // exchangeable continuous branches
    double slot_seconds = 1.0;
};

// Below-threshold probabilities from the fade model, the stationary chain
// and the per-scheme switching probabilities/rate.
MarkovSummary switching_summary(const analytic::LinkScenario& sc,
                                double slot_seconds = 1.0);

} // namespace gwdiv::switching
