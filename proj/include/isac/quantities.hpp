#pragma once

// Strong scalar types for power-ratio quantities. All dB values use the
// power convention (10·log10); there is no amplitude-dB type.

#include <compare>

namespace isac {

/// Speed of light in vacuum, m/s (exact SI value).
inline constexpr double kSpeedOfLight = 299792458.0;

inline constexpr double kPi = 3.14159265358979323846;

/// A strictly positive dimensionless ratio (gain, loss, SNR, ...).
class LinearRatio {
public:
    /// Throws DomainError unless value is finite and > 0.
    explicit LinearRatio(double value);

    [[nodiscard]] constexpr double value() const noexcept { return value_; }

    friend LinearRatio operator*(LinearRatio a, LinearRatio b) { return LinearRatio(a.value_ * b.value_); }
    friend LinearRatio operator/(LinearRatio a, LinearRatio b) { return LinearRatio(a.value_ / b.value_); }
    friend constexpr auto operator<=>(LinearRatio, LinearRatio) = default;

private:
    double value_;
};

/// A finite power ratio expressed in dB.
class Decibel {
public:
    /// Throws DomainError if value is NaN or infinite.
    explicit Decibel(double value);

    [[nodiscard]] constexpr double value() const noexcept { return value_; }

    friend Decibel operator+(Decibel a, Decibel b) { return Decibel(a.value_ + b.value_); }
    friend Decibel operator-(Decibel a, Decibel b) { return Decibel(a.value_ - b.value_); }
    friend Decibel operator-(Decibel a) { return Decibel(-a.value_); }
    friend Decibel operator*(double k, Decibel a) { return Decibel(k * a.value_); }
    friend Decibel operator*(Decibel a, double k) { return Decibel(k * a.value_); }
    friend constexpr auto operator<=>(Decibel, Decibel) = default;

private:
    double value_;
};

/// Power in watts, strictly positive.
class PowerWatts {
public:
    explicit PowerWatts(double watts);
    [[nodiscard]] constexpr double watts() const noexcept { return watts_; }
    friend constexpr auto operator<=>(PowerWatts, PowerWatts) = default;

private:
    double watts_;
};

/// Power in dB relative to 1 mW.
class PowerDbm {
public:
    explicit PowerDbm(double dbm);
    [[nodiscard]] constexpr double dbm() const noexcept { return dbm_; }
    friend constexpr auto operator<=>(PowerDbm, PowerDbm) = default;

private:
    double dbm_;
};

/// One-sided noise power spectral density in W/Hz.
class NoisePsd {
public:
    explicit NoisePsd(double watts_per_hz);
    static NoisePsd from_dbm_per_hz(double dbm_per_hz);

    [[nodiscard]] constexpr double watts_per_hz() const noexcept { return value_; }
    [[nodiscard]] double dbm_per_hz() const;
    friend constexpr auto operator<=>(NoisePsd, NoisePsd) = default;

private:
    double value_;
};

/// Distance in metres. Not validated here; operations check their own preconditions.
struct Meters {
    double value;
};

Decibel lin_to_db(LinearRatio x);
LinearRatio db_to_lin(Decibel x);

PowerWatts dbm_to_watts(PowerDbm x);
PowerDbm watts_to_dbm(PowerWatts x);

/// 10·log10 of a raw positive SI value (e.g. Hz, m², W/Hz). Throws DomainError if x <= 0.
Decibel to_db(double x);

}  // namespace isac
