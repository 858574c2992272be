#include "isac/link_budget.hpp"

#include <cmath>
#include <string>

#include "isac/errors.hpp"

namespace isac {

namespace {

void require_distance(Meters d, const char* name)
{
    if (!std::isfinite(d.value) || d.value <= 0.0) {
        throw DomainError(std::string(name) + " must be finite and > 0 m, got " + std::to_string(d.value));
    }
}

// SNR at d_c = 1 m; comm SNR falls off as 1/d_c^2.
double comm_snr_at_unit_distance(const SystemParams& p, LinearRatio l_comm)
{
    const double wavelength_term = kSpeedOfLight / (4.0 * kPi * p.freq_hz);
    return p.power.watts() * l_comm.value() * p.g_bs.value() * p.g_ue.value() /
           (p.n_ue.watts_per_hz() * p.bandwidth_hz) * wavelength_term * wavelength_term;
}

// SNR at d_r = 1 m; radar SNR falls off as 1/d_r^4.
double radar_snr_at_unit_distance(const SystemParams& p, LinearRatio l_radar)
{
    const double wavelength = kSpeedOfLight / p.freq_hz;
    const double four_pi = 4.0 * kPi;
    return p.power.watts() * l_radar.value() * p.g_bs.value() * p.g_bs.value() * p.g_p.value() /
           (p.n_bs.watts_per_hz() * p.bandwidth_hz) * wavelength * wavelength * p.sigma_rcs_m2 /
           (four_pi * four_pi * four_pi);
}

}  // namespace

void validate(const SystemParams& p)
{
    auto positive_finite = [](double v, const char* key) {
        if (!std::isfinite(v) || v <= 0.0) {
            throw ValidationError(std::string(key) + " must be finite and > 0, got " + std::to_string(v));
        }
    };
    positive_finite(p.freq_hz, "f_hz");
    positive_finite(p.bandwidth_hz, "b_hz");
    positive_finite(p.sigma_rcs_m2, "sigma_rcs_m2");
    if (p.bandwidth_hz >= p.freq_hz) {
        throw ValidationError("b_hz must be smaller than f_hz (bandwidth " + std::to_string(p.bandwidth_hz) +
                              " Hz, carrier " + std::to_string(p.freq_hz) + " Hz)");
    }
    // Remaining fields are strong types that are positive by construction.
}

LinearRatio Scenario::delta() const
{
    require_distance(d_c, "d_c");
    require_distance(d_r, "d_r");
    return LinearRatio(d_c.value / d_r.value);
}

LinearRatio comm_snr(const SystemParams& params, LinearRatio l_comm, Meters d_c)
{
    require_distance(d_c, "d_c");
    return LinearRatio(comm_snr_at_unit_distance(params, l_comm) / (d_c.value * d_c.value));
}

LinearRatio radar_snr(const SystemParams& params, LinearRatio l_radar, Meters d_r)
{
    require_distance(d_r, "d_r");
    const double d2 = d_r.value * d_r.value;
    return LinearRatio(radar_snr_at_unit_distance(params, l_radar) / (d2 * d2));
}

Meters solve_comm_range(const SystemParams& params, LinearRatio l_comm, LinearRatio target_snr)
{
    return Meters{std::sqrt(comm_snr_at_unit_distance(params, l_comm) / target_snr.value())};
}

Meters solve_radar_range(const SystemParams& params, LinearRatio l_radar, LinearRatio target_snr)
{
    return Meters{std::sqrt(std::sqrt(radar_snr_at_unit_distance(params, l_radar) / target_snr.value()))};
}

}  // namespace isac
