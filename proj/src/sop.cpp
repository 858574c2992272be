#include "isac/sop.hpp"

#include <cmath>

namespace isac {

Decibel nu_constant()
{
    return lin_to_db(LinearRatio(4.0 * kPi / (kSpeedOfLight * kSpeedOfLight)));
}

Decibel n_tilde(NoisePsd n_ue, NoisePsd n_bs)
{
    return 2.0 * to_db(n_ue.watts_per_hz()) - to_db(n_bs.watts_per_hz());
}

// Eliminating d_c between the comm and radar SNR expressions (d_r = d_c / delta)
// gives, in linear SI units,
//
//   rho_r = rho_c^2 * L_R / L_C^2 * B * G_P * sigma * delta^4 / (P * G_UE^2)
//           * N_UE^2 / N_BS * 4*pi*f^2 / c^2
//
// with a single factor of P in the denominator. G_BS cancels.
Decibel sop_radar_snr(const SystemParams& params, const CouplingState& coupling, Decibel comm_snr_db,
                      LinearRatio delta)
{
    const double rho_c = db_to_lin(comm_snr_db).value();
    const double l_c = coupling.loss_comm().value();
    const double l_r = coupling.loss_radar().value();
    const double d2 = delta.value() * delta.value();
    const double n_ue = params.n_ue.watts_per_hz();
    const double f_over_c = params.freq_hz / kSpeedOfLight;
    const double g_ue = params.g_ue.value();

    // Grouped so that intermediate products stay near unity.
    const double snr_term = (rho_c / l_c) * (rho_c / l_c) * l_r;
    const double noise_term = (n_ue / params.n_bs.watts_per_hz()) * n_ue * params.bandwidth_hz;
    const double geometry_term = 4.0 * kPi * f_over_c * f_over_c * d2 * d2 * params.sigma_rcs_m2;
    const double gain_term = params.g_p.value() / (g_ue * g_ue);

    return lin_to_db(LinearRatio(snr_term * noise_term / params.power.watts() * geometry_term * gain_term));
}

SopLine sop_intercept(const SystemParams& params, const CouplingState& coupling, LinearRatio delta)
{
    return SopLine{sop_radar_snr(params, coupling, Decibel(0.0), delta)};
}

}  // namespace isac
