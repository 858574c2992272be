#include "isac/quantities.hpp"

#include <cmath>
#include <string>

#include "isac/errors.hpp"

namespace isac {

namespace {

void require_positive(double v, const char* what)
{
    if (!std::isfinite(v) || v <= 0.0) {
        throw DomainError(std::string(what) + " must be finite and > 0, got " + std::to_string(v));
    }
}

void require_finite(double v, const char* what)
{
    if (!std::isfinite(v)) {
        throw DomainError(std::string(what) + " must be finite");
    }
}

}  // namespace

LinearRatio::LinearRatio(double value) : value_(value) { require_positive(value, "linear ratio"); }

Decibel::Decibel(double value) : value_(value) { require_finite(value, "dB value"); }

PowerWatts::PowerWatts(double watts) : watts_(watts) { require_positive(watts, "power [W]"); }

PowerDbm::PowerDbm(double dbm) : dbm_(dbm) { require_finite(dbm, "power [dBm]"); }

NoisePsd::NoisePsd(double watts_per_hz) : value_(watts_per_hz)
{
    require_positive(watts_per_hz, "noise PSD [W/Hz]");
}

NoisePsd NoisePsd::from_dbm_per_hz(double dbm_per_hz)
{
    require_finite(dbm_per_hz, "noise PSD [dBm/Hz]");
    return NoisePsd(std::pow(10.0, (dbm_per_hz - 30.0) / 10.0));
}

double NoisePsd::dbm_per_hz() const { return 10.0 * std::log10(value_) + 30.0; }

Decibel lin_to_db(LinearRatio x) { return Decibel(10.0 * std::log10(x.value())); }

LinearRatio db_to_lin(Decibel x) { return LinearRatio(std::pow(10.0, x.value() / 10.0)); }

PowerWatts dbm_to_watts(PowerDbm x) { return PowerWatts(std::pow(10.0, (x.dbm() - 30.0) / 10.0)); }

PowerDbm watts_to_dbm(PowerWatts x) { return PowerDbm(10.0 * std::log10(x.watts()) + 30.0); }

Decibel to_db(double x)
{
    require_positive(x, "argument of 10·log10");
    return Decibel(10.0 * std::log10(x));
}

}  // namespace isac
