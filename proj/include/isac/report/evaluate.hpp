#pragma once

#include <string>
#include <vector>

#include "isac/report/config.hpp"

namespace isac::report {

/// One evaluated operating point; the row layout shared by every sweep.
struct PointResult {
    double rho_c_db;
    double rho_r_db;
    double delta_lin;
    double d_c_m;
    double d_r_m;
    double spectral_eff;
};

/// SNRs at the configured distances. Throws ValidationError without a scenario.
PointResult evaluate_scenario(const RunConfig& config);

/// Distances meeting the configured target SNRs. Throws ValidationError without a comm target.
PointResult evaluate_targets(const RunConfig& config);

}  // namespace isac::report
