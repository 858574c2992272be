#pragma once

// Run configuration: a JSON document whose keys carry their unit as a suffix.
//
//   {
//     "preset": "sub6",
//     "system":   { "f_hz": 2.4e9, "b_hz": 1e8, "p_dbm": 20, "g_bs_lin": 16, "g_ue_lin": 4,
//                   "g_p_samples": 1024, "sigma_rcs_m2": 10, "n_psd_dbm_hz": -174 },
//     "coupling": { "beta": 0.5, "alpha": 0.3 },
//     "scenario": { "d_c_m": 500, "d_r_m": 500 },
//     "targets":  { "spectral_eff": 2, "rho_r_db": 10.8 },
//     "sweep":    { "axis": "spectral_eff", "start": 1, "stop": 14, "points": 131, "spacing": "linear" }
//   }
//
// Every section is optional; keys in "system" override the preset. Without a
// preset all system quantities are required.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isac/coupling.hpp"
#include "isac/detection.hpp"
#include "isac/link_budget.hpp"

namespace isac::report {

/// Radar target SNR used when the config names neither rho_r_db nor a detection spec.
inline constexpr double kDefaultRadarTargetDb = 10.8;

enum class Spacing { linear, log };

struct SweepAxis {
    std::string parameter;
    double start;
    double stop;
    int points;
    Spacing spacing;

    [[nodiscard]] std::vector<double> grid() const;
};

/// Any two of the three fields; the third follows from d_c = delta * d_r.
struct ScenarioSpec {
    std::optional<double> d_c_m;
    std::optional<double> d_r_m;
    std::optional<double> delta;

    [[nodiscard]] Scenario resolve() const;
};

/// Communication target from spectral_eff or rho_c_db (at most one); radar
/// target from rho_r_db or a detection spec (at most one, default 10.8 dB).
struct TargetSpec {
    std::optional<double> spectral_eff;
    std::optional<double> rho_c_db;
    std::optional<double> rho_r_db;
    std::optional<DetectionSpec> detection;

    [[nodiscard]] bool has_comm_target() const { return spectral_eff || rho_c_db; }
    /// Throws ValidationError if no communication target is set.
    [[nodiscard]] Decibel comm_db() const;
    [[nodiscard]] Decibel radar_db() const;
};

struct RunConfig {
    std::string preset;  ///< empty when no preset was used
    SystemParams system;
    double beta = 1.0;
    std::optional<double> alpha;
    std::optional<ScenarioSpec> scenario;
    std::optional<TargetSpec> targets;
    std::optional<SweepAxis> sweep;

    /// Throws ValidationError if beta < 1 and alpha is missing.
    [[nodiscard]] CouplingState coupling() const;
};

/**
 * Parses and validates a configuration document. base_preset, when
 * non-empty, is used unless the document names its own preset.
 *
 * Throws ParseError for malformed JSON and ValidationError for unknown keys,
 * missing keys, wrong types or out-of-range values.
 */
RunConfig parse_config(std::string_view source, std::string_view base_preset = {});

/// Config consisting only of a preset.
RunConfig preset_config(std::string_view name);

/// Reads and parses a config file; throws IoError if it cannot be read.
RunConfig load_config(const std::string& path, std::string_view base_preset = {});

/// Parameter names accepted as a sweep axis.
const std::vector<std::string_view>& sweep_axis_names();

/// Sets one named parameter (a sweep axis name) on a config, in the key's unit.
void apply_parameter(RunConfig& config, std::string_view name, double value);

/// Sets one "system" key on a parameter set, converting from the key's unit.
void set_system_value(SystemParams& params, std::string_view key, double value);

}  // namespace isac::report
