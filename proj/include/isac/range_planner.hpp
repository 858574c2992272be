#pragma once

#include "isac/coupling.hpp"
#include "isac/link_budget.hpp"
#include "isac/quantities.hpp"

namespace isac {

/// Desired SNRs for the communication user and the radar target.
struct TargetSnrs {
    Decibel comm_db;
    Decibel radar_db;
};

/// Distances meeting a TargetSnrs pair; d_c = delta * d_r.
struct RangePlan {
    LinearRatio delta;
    Meters d_r;
    Meters d_c;
};

/// Required comm SNR for spectral efficiency r (bits/s/Hz) under Gaussian signaling: 10·log10(2^r − 1).
Decibel snr_from_spectral_efficiency(double r);

/// log2(1 + rho_c).
double spectral_efficiency_from_snr(LinearRatio rho_c);

/// Shift of the log-domain distance ratio caused by partial coupling:
/// (10/4)·log10(L_C² / L_R). Zero when beta = 1.
Decibel delta_beta(double beta, double alpha);

/// Distance ratio d_c / d_r, in dB, at which both target SNRs are met simultaneously.
Decibel delta_db(const SystemParams& params, const CouplingState& coupling, const TargetSnrs& targets);

/// Radar range for radar_target_db and the user range for spectral efficiency r.
RangePlan plan_ranges(const SystemParams& params, const CouplingState& coupling, double r, Decibel radar_target_db);

}  // namespace isac
