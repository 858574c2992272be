#include "isac/detection.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "isac/errors.hpp"

namespace isac {

namespace {

constexpr double kSeriesRelTol = 1e-16;
constexpr int kMaxSeriesTerms = 10000;

constexpr double kBracketLoDb = -10.0;
constexpr double kBracketHiDb = 40.0;
constexpr double kBisectionTolDb = 1e-9;

// Poisson pmf e^{-mean} mean^k / k!, evaluated in the log domain.
double poisson_pmf(int k, double mean)
{
    if (mean == 0.0) {
        return k == 0 ? 1.0 : 0.0;
    }
    return std::exp(-mean + k * std::log(mean) - std::lgamma(k + 1.0));
}

// P(Poisson(mean) <= k).
double poisson_cdf(int k, double mean)
{
    double sum = 0.0;
    for (int j = k; j >= 0; --j) {
        const double term = poisson_pmf(j, mean);
        sum += term;
        if (j < mean && term < kSeriesRelTol * sum) {
            break;
        }
    }
    return std::min(sum, 1.0);
}

// P(Pois(mean) > k).
double poisson_sf(int k, double mean)
{
    double sum = 0.0;
    for (int j = k + 1, n = 0; n < kMaxSeriesTerms; ++j, ++n) {
        const double term = poisson_pmf(j, mean);
        sum += term;
        if (j > mean && term < kSeriesRelTol * sum) {
            break;
        }
    }
    return std::min(sum, 1.0);
}

void require_in(double v, double lo, double hi, const char* name)
{
    if (!(v >= lo && v <= hi)) {
        throw DomainError(std::string(name) + " = " + std::to_string(v) + " outside Albersheim validity range [" +
                          std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
}

}  // namespace

void validate(const DetectionSpec& spec)
{
    if (!(spec.p_fa > 0.0 && spec.p_fa < spec.p_d && spec.p_d < 1.0)) {
        throw DomainError("detection spec requires 0 < p_fa < p_d < 1 (p_d = " + std::to_string(spec.p_d) +
                          ", p_fa = " + std::to_string(spec.p_fa) + ")");
    }
    if (spec.n_samples < 1) {
        throw DomainError("n_samples must be >= 1, got " + std::to_string(spec.n_samples));
    }
}

Decibel processing_gain(int n)
{
    if (n < 1) {
        throw DomainError("processing gain needs n >= 1 samples, got " + std::to_string(n));
    }
    return Decibel(10.0 * std::log10(static_cast<double>(n)));
}

Decibel required_snr_albersheim(const DetectionSpec& spec)
{
    validate(spec);
    require_in(spec.p_fa, 1e-7, 1e-3, "p_fa");
    require_in(spec.p_d, 0.1, 0.99, "p_d");
    require_in(spec.n_samples, 1, 8096, "n_samples");

    const double n = spec.n_samples;
    const double a = std::log(0.62 / spec.p_fa);
    const double z = std::log(spec.p_d / (1.0 - spec.p_d));
    return Decibel(-5.0 * std::log10(n) +
                   (6.2 + 4.54 / std::sqrt(n + 0.44)) * std::log10(a + 0.12 * a * z + 1.7 * z));
}

namespace {

// Q1(a, b) as a Poisson mixture of Poisson tail probabilities:
//
//   Q1(a, b)     = sum_k Pois(k; a^2/2) * P(Pois(b^2/2) <= k)
//   1 - Q1(a, b) = sum_k Pois(k; a^2/2) * P(Pois(b^2/2) >  k)
//
// The second form is summed when b < a so that values close to 1 keep full
// absolute precision. The sum starts at the mode of the first Poisson weight
// and walks outwards, which keeps every term representable. Also used beyond
// the public argument range by the SNR bisection, whose 40 dB bracket end
// needs a ~ 141.
double marcum_q1_series(double a, double b)
{
    if (b == 0.0) {
        return 1.0;
    }
    const double lambda = 0.5 * a * a;
    const double x = 0.5 * b * b;
    const bool upper = b < a;
    const int k0 = static_cast<int>(std::floor(lambda));

    const double w0 = poisson_pmf(k0, lambda);
    const double g0 = upper ? poisson_sf(k0, x) : poisson_cdf(k0, x);
    double sum = w0 * g0;

    // Upward from the mode: the lower tail grows by pmf(k), the upper shrinks.
    double w = w0;
    double g = g0;
    for (int k = k0 + 1, n = 0; n < kMaxSeriesTerms; ++k, ++n) {
        w *= lambda / k;
        g = std::clamp(upper ? g - poisson_pmf(k, x) : g + poisson_pmf(k, x), 0.0, 1.0);
        sum += w * g;
        if (w < kSeriesRelTol * sum || w == 0.0) {
            break;
        }
    }

    // Downward from the mode.
    w = w0;
    g = g0;
    for (int k = k0 - 1, n = 0; k >= 0 && n < kMaxSeriesTerms; --k, ++n) {
        w *= (k + 1) / lambda;
        g = std::clamp(upper ? g + poisson_pmf(k + 1, x) : g - poisson_pmf(k + 1, x), 0.0, 1.0);
        const double term = w * g;
        sum += term;
        if (term < kSeriesRelTol * sum || w == 0.0) {
            break;
        }
    }
    return std::clamp(upper ? 1.0 - sum : sum, 0.0, 1.0);
}

}  // namespace

double marcum_q1(double a, double b)
{
    if (!(a >= 0.0 && a < 100.0) || !(b >= 0.0 && b < 100.0)) {
        throw DomainError("marcum_q1 arguments must lie in [0, 100), got a = " + std::to_string(a) +
                          ", b = " + std::to_string(b));
    }
    return marcum_q1_series(a, b);
}

double detection_probability(LinearRatio snr, double p_fa)
{
    return marcum_q1_series(std::sqrt(2.0 * snr.value()), std::sqrt(-2.0 * std::log(p_fa)));
}

Decibel required_snr_exact(double p_d, double p_fa)
{
    validate(DetectionSpec{p_d, p_fa, 1});

    auto excess = [&](double snr_db) {
        return detection_probability(db_to_lin(Decibel(snr_db)), p_fa) - p_d;
    };
    double lo = kBracketLoDb;
    double hi = kBracketHiDb;
    if (excess(lo) > 0.0 || excess(hi) < 0.0) {
        throw InternalError("required SNR for p_d = " + std::to_string(p_d) + ", p_fa = " + std::to_string(p_fa) +
                            " is outside the [-10, 40] dB search bracket");
    }
    while (hi - lo > kBisectionTolDb) {
        const double mid = 0.5 * (lo + hi);
        (excess(mid) < 0.0 ? lo : hi) = mid;
    }
    return Decibel(0.5 * (lo + hi));
}

}  // namespace isac
