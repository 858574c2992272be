#include "isac/range_planner.hpp"

#include <cmath>
#include <string>

#include "isac/errors.hpp"

namespace isac {

Decibel snr_from_spectral_efficiency(double r)
{
    if (!std::isfinite(r) || r <= 0.0) {
        throw DomainError("spectral efficiency must be finite and > 0 bits/s/Hz, got " + std::to_string(r));
    }
    // expm1 keeps precision for small r where 2^r - 1 suffers cancellation.
    return lin_to_db(LinearRatio(std::expm1(r * std::log(2.0))));
}

double spectral_efficiency_from_snr(LinearRatio rho_c) { return std::log1p(rho_c.value()) / std::log(2.0); }

Decibel delta_beta(double beta, double alpha)
{
    if (!(beta >= 0.0 && beta <= 1.0) || !(alpha >= 0.0 && alpha <= 1.0)) {
        throw DomainError("delta_beta: beta and alpha must lie in [0, 1]");
    }
    const double l_c = beta + (1.0 - beta) * alpha;
    const double l_r = beta + (1.0 - beta) * (1.0 - alpha);
    if (l_r <= 0.0) {
        throw DomainError("delta_beta: radar power share is zero (beta = 0, alpha = 1); division by zero");
    }
    if (l_c <= 0.0) {
        throw DomainError("delta_beta: communication power share is zero (beta = 0, alpha = 0); log of zero");
    }
    return Decibel(2.5 * std::log10(l_c * l_c / l_r));
}

// Evaluated by inverting both SNR expressions and taking the ratio of the
// resulting distances, which keeps every term in linear SI units.
Decibel delta_db(const SystemParams& params, const CouplingState& coupling, const TargetSnrs& targets)
{
    const Meters d_c = solve_comm_range(params, coupling.loss_comm(), db_to_lin(targets.comm_db));
    const Meters d_r = solve_radar_range(params, coupling.loss_radar(), db_to_lin(targets.radar_db));
    return lin_to_db(LinearRatio(d_c.value / d_r.value));
}

RangePlan plan_ranges(const SystemParams& params, const CouplingState& coupling, double r, Decibel radar_target_db)
{
    const TargetSnrs targets{snr_from_spectral_efficiency(r), radar_target_db};
    const Meters d_r = solve_radar_range(params, coupling.loss_radar(), db_to_lin(radar_target_db));
    const LinearRatio delta = db_to_lin(delta_db(params, coupling, targets));
    return RangePlan{delta, d_r, Meters{delta.value() * d_r.value}};
}

}  // namespace isac
