#include "gwdiv/link_budget.hpp"

#include <cmath>
#include <stdexcept>

namespace gwdiv::budget {

void BudgetEntry::validate() const {
    if (!std::isfinite(eirp_dbw) || !std::isfinite(free_space_loss_db) ||
        !std::isfinite(g_over_t_dbk))
        throw std::domain_error("budget entry: dB fields must be finite");
    if (!(bandwidth_hz > 0.0) || !std::isfinite(bandwidth_hz))
        throw std::domain_error("budget entry: bandwidth must be > 0 Hz");
}

double clear_sky_snr(const BudgetEntry& entry) {
    entry.validate();
    return entry.eirp_dbw - entry.free_space_loss_db + entry.g_over_t_dbk -
           kBoltzmannDbwPerKHz - 10.0 * std::log10(entry.bandwidth_hz);
}

} // namespace gwdiv::budget
