#pragma once

#include "isac/quantities.hpp"

namespace isac {

/**
 * Physical parameters of one monostatic DFRC base-station configuration.
 *
 * All values are linear SI. The same antenna gain g_bs is used for the BS
 * transmit and receive paths.
 */
struct SystemParams {
    double freq_hz;
    double bandwidth_hz;
    PowerWatts power;
    LinearRatio g_bs;
    LinearRatio g_ue;
    LinearRatio g_p;  ///< radar processing gain
    double sigma_rcs_m2;
    NoisePsd n_ue;
    NoisePsd n_bs;
};

/// Throws ValidationError naming the first violated constraint.
void validate(const SystemParams& params);

/// BS-to-user and BS-to-target distances.
struct Scenario {
    Meters d_c;
    Meters d_r;

    /// d_c / d_r; throws DomainError unless both distances are positive.
    [[nodiscard]] LinearRatio delta() const;
};

/// Free-space SNR at the communication user.
LinearRatio comm_snr(const SystemParams& params, LinearRatio l_comm, Meters d_c);

/// Monostatic echo SNR at the base station, including the processing gain.
LinearRatio radar_snr(const SystemParams& params, LinearRatio l_radar, Meters d_r);

/// Distance at which comm_snr equals target_snr.
Meters solve_comm_range(const SystemParams& params, LinearRatio l_comm, LinearRatio target_snr);

/// Distance at which radar_snr equals target_snr.
Meters solve_radar_range(const SystemParams& params, LinearRatio l_radar, LinearRatio target_snr);

}  // namespace isac
