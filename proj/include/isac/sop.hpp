#pragma once

// SNR operating point (SOP) relation: for a fixed distance ratio
// delta = d_c / d_r, every achievable (comm, radar) SNR pair in dB lies on a
// line of slope 2.

#include "isac/coupling.hpp"
#include "isac/link_budget.hpp"
#include "isac/quantities.hpp"

namespace isac {

/// The SOP line radar_db = 2 * comm_db + intercept_db.
struct SopLine {
    static constexpr double slope = 2.0;
    Decibel intercept_db;

    [[nodiscard]] Decibel radar_db(Decibel comm_db) const { return slope * comm_db + intercept_db; }
};

/// 10·log10(4π / c²).
Decibel nu_constant();

/// 2·Ñ_UE − Ñ_BS with both PSDs taken in W/Hz.
Decibel n_tilde(NoisePsd n_ue, NoisePsd n_bs);

/// Radar SNR on the operating line through comm_snr_db for distance ratio delta.
Decibel sop_radar_snr(const SystemParams& params, const CouplingState& coupling, Decibel comm_snr_db,
                      LinearRatio delta);

/// The full operating line for distance ratio delta.
SopLine sop_intercept(const SystemParams& params, const CouplingState& coupling, LinearRatio delta);

}  // namespace isac
