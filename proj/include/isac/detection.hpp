#pragma once

#include "isac/quantities.hpp"

namespace isac {

/// Detector requirement: detection and false-alarm probabilities and the
/// number of integrated samples.
struct DetectionSpec {
    double p_d;
    double p_fa;
    int n_samples;
};

/// Throws DomainError unless 0 < p_fa < p_d < 1 and n_samples >= 1.
void validate(const DetectionSpec& spec);

/// Coherent integration gain of n samples, 10·log10(n).
Decibel processing_gain(int n);

/**
 * Albersheim's closed-form estimate of the per-sample SNR needed to reach
 * (p_d, p_fa) with n noncoherently integrated samples of a nonfluctuating
 * target. Valid for p_fa in [1e-7, 1e-3], p_d in [0.1, 0.99] and n in
 * [1, 8096]; outside that domain a DomainError names the violated bound.
 */
Decibel required_snr_albersheim(const DetectionSpec& spec);

/// Generalized Marcum Q function of order 1 for 0 <= a, b < 100.
double marcum_q1(double a, double b);

/**
 * Exact single-sample SNR for a nonfluctuating target with a square-law
 * detector: the SNR s with Q1(sqrt(2 s), sqrt(-2 ln p_fa)) = p_d, found by
 * bisection over [-10, 40] dB. Throws InternalError if the root is not in
 * that bracket.
 */
Decibel required_snr_exact(double p_d, double p_fa);

/// Detection probability of a single-sample nonfluctuating target at linear SNR snr.
double detection_probability(LinearRatio snr, double p_fa);

}  // namespace isac
