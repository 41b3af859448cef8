#pragma once

namespace gwdiv::budget {

inline constexpr double kBoltzmannDbwPerKHz = -228.6; // dBW/K/Hz

// One direction of a forward link budget.
struct BudgetEntry {
    double eirp_dbw = 0.0;
    double free_space_loss_db = 0.0;
    double g_over_t_dbk = 0.0;
    double bandwidth_hz = 1.0;

    void validate() const; // throws std::domain_error
};

// Clear-sky SNR in dB: EIRP - FSL + G/T + 228.6 - 10 log10(B).
double clear_sky_snr(const BudgetEntry& entry);

} // namespace gwdiv::budget
