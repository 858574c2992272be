#include "isac/report/evaluate.hpp"

#include "isac/errors.hpp"
#include "isac/range_planner.hpp"

namespace isac::report {

PointResult evaluate_scenario(const RunConfig& config)
{
    if (!config.scenario) {
        throw ValidationError("missing 'scenario' section");
    }
    const auto coupling = config.coupling();
    const Scenario sc = config.scenario->resolve();
    const LinearRatio delta = sc.delta();
    const LinearRatio rho_c = comm_snr(config.system, coupling.loss_comm(), sc.d_c);
    const LinearRatio rho_r = radar_snr(config.system, coupling.loss_radar(), sc.d_r);
    return PointResult{lin_to_db(rho_c).value(), lin_to_db(rho_r).value(), delta.value(),
                       sc.d_c.value,             sc.d_r.value,             spectral_efficiency_from_snr(rho_c)};
}

PointResult evaluate_targets(const RunConfig& config)
{
    if (!config.targets) {
        throw ValidationError("missing 'targets' section");
    }
    const auto coupling = config.coupling();
    const TargetSnrs targets{config.targets->comm_db(), config.targets->radar_db()};
    const Meters d_r = solve_radar_range(config.system, coupling.loss_radar(), db_to_lin(targets.radar_db));
    const LinearRatio delta = db_to_lin(delta_db(config.system, coupling, targets));
    return PointResult{targets.comm_db.value(),
                       targets.radar_db.value(),
                       delta.value(),
                       delta.value() * d_r.value,
                       d_r.value,
                       spectral_efficiency_from_snr(db_to_lin(targets.comm_db))};
}

}  // namespace isac::report
