#include "isac/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "isac/errors.hpp"

namespace isac {

namespace {

// Slack on the [10·log10(beta), 0] dB range check; absorbs rounding when the
// input is an endpoint computed from beta.
constexpr double kDbRangeSlack = 1e-9;

double require_unit_interval(double v, const char* name)
{
    if (!(v >= 0.0 && v <= 1.0)) {
        throw DomainError(std::string(name) + " must lie in [0, 1], got " + std::to_string(v));
    }
    return v;
}

LinearRatio positive_loss(double v, const char* name)
{
    if (v <= 0.0) {
        throw DomainError(std::string(name) + " is zero: the service receives no transmit power");
    }
    return LinearRatio(v);
}

}  // namespace

CouplingState::CouplingState(double beta, double alpha)
    : beta_(require_unit_interval(beta, "beta")),
      alpha_(require_unit_interval(alpha, "alpha")),
      loss_comm_(positive_loss(beta + (1.0 - beta) * alpha, "communication loss factor")),
      loss_radar_(positive_loss(beta + (1.0 - beta) * (1.0 - alpha), "radar loss factor"))
{
}

std::pair<PowerWatts, PowerWatts> split_powers(PowerWatts p, const CouplingState& coupling)
{
    return {PowerWatts(p.watts() * coupling.loss_comm().value()),
            PowerWatts(p.watts() * coupling.loss_radar().value())};
}

LinearRatio loss_pair_linear(double beta, LinearRatio l_comm)
{
    require_unit_interval(beta, "beta");
    // Factors that went through a dB round trip may sit an ulp or two outside.
    const double slack = 1e-12;
    const double lc = l_comm.value();
    if (lc < beta - slack || lc > 1.0 + slack) {
        throw DomainError("communication loss factor " + std::to_string(lc) + " outside [beta, 1] = [" +
                          std::to_string(beta) + ", 1]");
    }
    return positive_loss(std::clamp(1.0 + beta - lc, beta, 1.0), "radar loss factor");
}

Decibel loss_pair_db(double beta, Decibel l_comm_db)
{
    require_unit_interval(beta, "beta");
    const double lo = beta > 0.0 ? 10.0 * std::log10(beta) : -INFINITY;
    const double x = l_comm_db.value();
    if (x > kDbRangeSlack || x < lo - kDbRangeSlack) {
        throw DomainError("communication loss " + std::to_string(x) + " dB outside [10·log10(beta), 0]");
    }
    const double arg = 1.0 + beta - std::pow(10.0, x / 10.0);
    if (arg <= 0.0) {
        throw DomainError("radar loss factor is non-positive; logarithm undefined");
    }
    return Decibel(10.0 * std::log10(arg));
}

SnrPoint apply_coupling(const SnrPoint& point_beta1, const CouplingState& coupling)
{
    return {point_beta1.comm_db + lin_to_db(coupling.loss_comm()),
            point_beta1.radar_db + lin_to_db(coupling.loss_radar())};
}

}  // namespace isac
