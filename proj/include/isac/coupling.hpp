#pragma once

#include <utility>

#include "isac/quantities.hpp"

namespace isac {

/// A (communication, radar) SNR pair in dB.
struct SnrPoint {
    Decibel comm_db;
    Decibel radar_db;
};

/**
 * Channel coupling between the communication and radar beams.
 *
 * beta is the coupling level (1 = one shared beam, 0 = orthogonal beams) and
 * alpha the share of the uncoupled power given to communication. The SNR
 * loss factors relative to the fully coupled case are
 *
 *     L_C = beta + (1 - beta) * alpha
 *     L_R = beta + (1 - beta) * (1 - alpha)
 *
 * so that L_C + L_R = 1 + beta. A state in which one service receives no
 * power (beta = 0 with alpha = 0 or 1) has no finite SNR and is rejected.
 */
class CouplingState {
public:
    /// Throws DomainError if beta or alpha is outside [0, 1] or a loss factor is zero.
    CouplingState(double beta, double alpha);

    /// beta = 1; alpha is irrelevant and stored as 1.
    static CouplingState fully_coupled() { return CouplingState(1.0, 1.0); }

    [[nodiscard]] double beta() const noexcept { return beta_; }
    [[nodiscard]] double alpha() const noexcept { return alpha_; }
    [[nodiscard]] LinearRatio loss_comm() const noexcept { return loss_comm_; }
    [[nodiscard]] LinearRatio loss_radar() const noexcept { return loss_radar_; }

private:
    double beta_;
    double alpha_;
    LinearRatio loss_comm_;
    LinearRatio loss_radar_;
};

/// Transmit power allotted to (communication, radar): (P·L_C, P·L_R).
std::pair<PowerWatts, PowerWatts> split_powers(PowerWatts p, const CouplingState& coupling);

/// Radar loss factor paired with a communication loss factor at fixed beta: 1 + beta - L_C.
LinearRatio loss_pair_linear(double beta, LinearRatio l_comm);

/// Log-domain counterpart of loss_pair_linear.
Decibel loss_pair_db(double beta, Decibel l_comm_db);

/// Shifts an SNR pair computed for beta = 1 by the (non-positive) dB loss factors.
SnrPoint apply_coupling(const SnrPoint& point_beta1, const CouplingState& coupling);

}  // namespace isac
