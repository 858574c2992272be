#include "isac/report/presets.hpp"

#include <array>
#include <string_view>

namespace isac::report {

namespace {

struct Band {
    std::string_view name;
    double f_hz;
    double b_hz;
    double g_bs;
    double sigma_rcs_m2;
    double g_p;
};

constexpr double kUeGain = 4.0;
constexpr double kNoisePsdDbmHz = -174.0;
constexpr double kDefaultPowerDbm = 30.0;

constexpr std::array kBands{
    Band{"config1", 1e9, 100e6, 10.0, 10.0, 1.0},
    Band{"config2", 10e9, 100e6, 10.0, 10.0, 1.0},
    Band{"config3", 10e9, 100e6, 100.0, 10.0, 1.0},
    Band{"config4", 100e9, 1e9, 1000.0, 1.0, 1.0},
    Band{"sub6", 2.4e9, 100e6, 16.0, 10.0, 1024.0},
    Band{"mmwave", 24e9, 1e9, 64.0, 10.0, 1024.0},
    Band{"subthz", 140e9, 4e9, 128.0, 1.0, 1024.0},
};

}  // namespace

const std::vector<std::string_view>& preset_names()
{
    static const std::vector<std::string_view> names = [] {
        std::vector<std::string_view> out;
        for (const auto& b : kBands) {
            out.push_back(b.name);
        }
        return out;
    }();
    return names;
}

std::optional<SystemParams> find_preset(std::string_view name)
{
    for (const auto& b : kBands) {
        if (b.name == name) {
            const auto noise = NoisePsd::from_dbm_per_hz(kNoisePsdDbmHz);
            return SystemParams{b.f_hz,
                                b.b_hz,
                                dbm_to_watts(PowerDbm(kDefaultPowerDbm)),
                                LinearRatio(b.g_bs),
                                LinearRatio(kUeGain),
                                LinearRatio(b.g_p),
                                b.sigma_rcs_m2,
                                noise,
                                noise};
        }
    }
    return std::nullopt;
}

}  // namespace isac::report
