#include "gwdiv/switching.hpp"

#include <cmath>
#include <stdexcept>

#include "gwdiv/errors.hpp"

namespace gwdiv::switching {

SwitchState classify_state(int prev_active, double snr1, double snr2, double theta) {
    if (!(snr1 > 0.0) || !(snr2 > 0.0) || !(theta > 0.0))
        throw std::domain_error("classify_state: SNRs and theta must be > 0");
    if (prev_active != 1 && prev_active != 2)
        throw std::domain_error("classify_state: previous active gateway must be 1 or 2");

    if (prev_active == 1) {
        if (snr1 >= theta) return {1, 1}; // GW1 continues
        if (snr2 > theta) return {3, 2};  // GW1 in outage, GW2 better: switch
        return {2, 1};                    // both in outage, no switching
    }
    if (snr2 >= theta) return {4, 2};     // GW2 continues
    if (snr1 > theta) return {6, 1};      // GW2 in outage, GW1 better: switch
    return {5, 2};                        // both in outage, no switching
}

StepResult step(SchemeKind scheme, int prev_active, double snr1, double snr2,
                double theta) {
    if (!(snr1 > 0.0) || !(snr2 > 0.0) || !(theta > 0.0))
        throw std::domain_error("step: SNRs and theta must be > 0");
    if (prev_active != 1 && prev_active != 2)
        throw std::domain_error("step: previous active gateway must be 1 or 2");

    const auto branch = [&](int gw) { return gw == 1 ? snr1 : snr2; };

    switch (scheme) {
        case SchemeKind::MSSC: {
            const SwitchState st = classify_state(prev_active, snr1, snr2, theta);
            return {st.active_gw, st.active_gw != prev_active, branch(st.active_gw)};
        }
        case SchemeKind::SSC: {
            // Switch on any below-threshold slot, blind to the other branch.
            const int active = branch(prev_active) < theta ? 3 - prev_active : prev_active;
            return {active, active != prev_active, branch(active)};
        }
        case SchemeKind::SC: {
            int active = prev_active; // ties keep the previous gateway
            if (snr1 > snr2) active = 1;
            else if (snr2 > snr1) active = 2;
            return {active, active != prev_active, branch(active)};
        }
        case SchemeKind::Single:
            return {1, false, snr1};
        case SchemeKind::MRC:
            return {prev_active, false, snr1 + snr2};
    }
    throw std::domain_error("step: unknown scheme");
}

Matrix6 transition_matrix(double p, double p12) {
    if (!(p >= 0.0 && p <= 1.0) || !(p12 >= 0.0 && p12 <= 1.0))
        throw std::domain_error("transition_matrix: probabilities must lie in [0, 1]");
    if (p12 > p)
        throw std::domain_error("transition_matrix: joint probability exceeds marginal");

    const std::array<double, 6> gw1_row = {1.0 - p, p12, p - p12, 0.0, 0.0, 0.0};
    const std::array<double, 6> gw2_row = {0.0, 0.0, 0.0, 1.0 - p, p12, p - p12};

    Matrix6 m;
    m[0] = gw1_row; // state 1
    m[1] = gw1_row; // state 2
    m[2] = gw2_row; // state 3
    m[3] = gw2_row; // state 4
    m[4] = gw2_row; // state 5
    m[5] = gw1_row; // state 6
    return m;
}

Vector6 stationary_distribution(const Matrix6& m, double tol) {
    Vector6 pi;
    pi.fill(1.0 / 6.0);
    for (int iter = 0; iter < 10000; ++iter) {
        Vector6 next{};
        for (int j = 0; j < 6; ++j)
            for (int i = 0; i < 6; ++i) next[j] += pi[i] * m[i][j];
        double sum = 0.0;
        for (double x : next) sum += x;
        for (double& x : next) x /= sum;

        double delta = 0.0;
        for (int j = 0; j < 6; ++j) delta = std::max(delta, std::abs(next[j] - pi[j]));
        pi = next;
        if (delta <= tol) return pi;
    }
    throw NumericalError("stationary_distribution: power iteration did not converge",
                         tol * 10.0, tol);
}

MarkovSummary switching_summary(const analytic::LinkScenario& sc, double slot_seconds) {
    sc.validate();
    if (!(slot_seconds > 0.0))
        throw std::domain_error("switching_summary: slot duration must be > 0");

    // {gamma <= theta} = {A > Gamma_CS - Theta}.
    const double margin = sc.cs_snr_ul_db - sc.switch_thresh_db;
    const double p = channel::marginal_exceed_prob(sc.fade_ul, 1, margin);
    const double p2 = channel::marginal_exceed_prob(sc.fade_ul, 2, margin);
    double p12 = sc.fade_ul.rho >= 1.0
                     ? std::min(p, p2) // comonotone branches
                     : channel::joint_exceed_prob(sc.fade_ul, margin, margin);
    p12 = std::min(p12, p); // guard quadrature round-off at the boundary

    MarkovSummary out;
    out.p = p;
    out.p12 = p12;
    out.stationary = stationary_distribution(transition_matrix(p, p12));
    out.switch_prob = out.stationary[2] + out.stationary[5];
    out.slot_seconds = slot_seconds;
    out.switch_rate = out.switch_prob / slot_seconds;
    out.switch_prob_ssc = p;
    out.switch_prob_sc = 0.5;
    return out;
}

} // namespace gwdiv::switching
