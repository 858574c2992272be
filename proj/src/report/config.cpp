#include "isac/report/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "isac/errors.hpp"
#include "isac/range_planner.hpp"
#include "isac/report/presets.hpp"

namespace isac::report {

namespace {

using nlohmann::json;

const std::vector<std::string_view> kSystemKeys{
    "f_hz",         "b_hz",         "p_dbm",          "p_w",
    "g_bs_lin",     "g_bs_db",      "g_ue_lin",       "g_ue_db",
    "g_p_lin",      "g_p_db",       "g_p_samples",    "sigma_rcs_m2",
    "n_psd_dbm_hz", "n_ue_psd_dbm_hz", "n_bs_psd_dbm_hz",
};

// Each group must be covered by at least one key when no preset is given.
const std::vector<std::vector<std::string_view>> kRequiredGroups{
    {"f_hz"},
    {"b_hz"},
    {"p_dbm", "p_w"},
    {"g_bs_lin", "g_bs_db"},
    {"g_ue_lin", "g_ue_db"},
    {"g_p_lin", "g_p_db", "g_p_samples"},
    {"sigma_rcs_m2"},
    {"n_psd_dbm_hz", "n_ue_psd_dbm_hz"},
    {"n_psd_dbm_hz", "n_bs_psd_dbm_hz"},
};

// Keys that set the same quantity; at most one per group may appear.
const std::vector<std::vector<std::string_view>> kExclusiveGroups{
    {"p_dbm", "p_w"},
    {"g_bs_lin", "g_bs_db"},
    {"g_ue_lin", "g_ue_db"},
    {"g_p_lin", "g_p_db", "g_p_samples"},
};

bool contains(const std::vector<std::string_view>& v, std::string_view key)
{
    return std::find(v.begin(), v.end(), key) != v.end();
}

void check_keys(const json& obj, const std::string& section, const std::set<std::string>& allowed)
{
    if (!obj.is_object()) {
        throw ValidationError("'" + section + "' must be an object");
    }
    for (const auto& [key, _] : obj.items()) {
        if (!allowed.contains(key)) {
            throw ValidationError("unknown key '" + section + "." + key + "'");
        }
    }
}

double number_at(const json& obj, const std::string& section, const std::string& key)
{
    const auto& v = obj.at(key);
    if (!v.is_number()) {
        throw ValidationError("'" + section + "." + key + "' must be a number");
    }
    const double d = v.get<double>();
    if (!std::isfinite(d)) {
        throw ValidationError("'" + section + "." + key + "' must be finite");
    }
    return d;
}

std::optional<double> optional_number(const json& obj, const std::string& section, const std::string& key)
{
    if (!obj.contains(key)) {
        return std::nullopt;
    }
    return number_at(obj, section, key);
}

int integer_at(const json& obj, const std::string& section, const std::string& key)
{
    const auto& v = obj.at(key);
    if (!v.is_number_integer()) {
        throw ValidationError("'" + section + "." + key + "' must be an integer");
    }
    return v.get<int>();
}

void require_positive(double v, const std::string& key)
{
    if (!(v > 0.0)) {
        throw ValidationError("'" + key + "' must be > 0, got " + std::to_string(v));
    }
}

void require_unit_interval(double v, const std::string& key)
{
    if (!(v >= 0.0 && v <= 1.0)) {
        throw ValidationError("'" + key + "' must lie in [0, 1], got " + std::to_string(v));
    }
}

SystemParams placeholder_params()
{
    return SystemParams{1.0, 1.0, PowerWatts(1.0), LinearRatio(1.0), LinearRatio(1.0), LinearRatio(1.0),
                        1.0, NoisePsd(1.0), NoisePsd(1.0)};
}

SystemParams parse_system(const json* section, const std::string& preset, bool& explicit_g_p)
{
    std::map<std::string, double> values;
    if (section != nullptr) {
        check_keys(*section, "system", {kSystemKeys.begin(), kSystemKeys.end()});
        for (const auto& [key, _] : section->items()) {
            values[key] = number_at(*section, "system", key);
        }
    }
    for (const auto& group : kExclusiveGroups) {
        const auto n = std::count_if(group.begin(), group.end(), [&](auto k) { return values.contains(std::string(k)); });
        if (n > 1) {
            throw ValidationError("system: keys '" + std::string(group[0]) + "' ... are alternatives; give only one");
        }
    }
    explicit_g_p = values.contains("g_p_lin") || values.contains("g_p_db") || values.contains("g_p_samples");

    SystemParams params = placeholder_params();
    if (!preset.empty()) {
        auto found = find_preset(preset);
        if (!found) {
            throw ValidationError("unknown preset '" + preset + "'");
        }
        params = *found;
    } else {
        for (const auto& group : kRequiredGroups) {
            const bool covered =
                std::any_of(group.begin(), group.end(), [&](auto k) { return values.contains(std::string(k)); });
            if (!covered) {
                throw ValidationError("missing key 'system." + std::string(group.back()) + "' (no preset given)");
            }
        }
    }
    // The shared noise key first so that per-side keys override it.
    if (auto it = values.find("n_psd_dbm_hz"); it != values.end()) {
        set_system_value(params, it->first, it->second);
    }
    for (const auto& [key, value] : values) {
        if (key != "n_psd_dbm_hz") {
            set_system_value(params, key, value);
        }
    }
    validate(params);
    return params;
}

ScenarioSpec parse_scenario(const json& obj)
{
    check_keys(obj, "scenario", {"d_c_m", "d_r_m", "delta"});
    ScenarioSpec s{optional_number(obj, "scenario", "d_c_m"), optional_number(obj, "scenario", "d_r_m"),
                   optional_number(obj, "scenario", "delta")};
    const int given = int(s.d_c_m.has_value()) + int(s.d_r_m.has_value()) + int(s.delta.has_value());
    if (given != 2) {
        throw ValidationError("scenario needs exactly two of 'd_c_m', 'd_r_m', 'delta'");
    }
    if (s.d_c_m) require_positive(*s.d_c_m, "scenario.d_c_m");
    if (s.d_r_m) require_positive(*s.d_r_m, "scenario.d_r_m");
    if (s.delta) require_positive(*s.delta, "scenario.delta");
    return s;
}

DetectionSpec parse_detection(const json& obj)
{
    check_keys(obj, "targets.detection", {"p_d", "p_fa", "n_samples"});
    for (const char* key : {"p_d", "p_fa"}) {
        if (!obj.contains(key)) {
            throw ValidationError(std::string("missing key 'targets.detection.") + key + "'");
        }
    }
    DetectionSpec spec{number_at(obj, "targets.detection", "p_d"), number_at(obj, "targets.detection", "p_fa"),
                       obj.contains("n_samples") ? integer_at(obj, "targets.detection", "n_samples") : 1};
    try {
        validate(spec);
    } catch (const DomainError& e) {
        throw ValidationError(std::string("targets.detection: ") + e.what());
    }
    return spec;
}

TargetSpec parse_targets(const json& obj)
{
    check_keys(obj, "targets", {"spectral_eff", "rho_c_db", "rho_r_db", "detection"});
    TargetSpec t;
    t.spectral_eff = optional_number(obj, "targets", "spectral_eff");
    t.rho_c_db = optional_number(obj, "targets", "rho_c_db");
    t.rho_r_db = optional_number(obj, "targets", "rho_r_db");
    if (obj.contains("detection")) {
        t.detection = parse_detection(obj.at("detection"));
    }
    if (t.spectral_eff && t.rho_c_db) {
        throw ValidationError("targets: give either 'spectral_eff' or 'rho_c_db', not both");
    }
    if (t.rho_r_db && t.detection) {
        throw ValidationError("targets: give either 'rho_r_db' or 'detection', not both");
    }
    if (t.spectral_eff) require_positive(*t.spectral_eff, "targets.spectral_eff");
    return t;
}

Spacing parse_spacing(const json& obj)
{
    if (!obj.contains("spacing")) {
        return Spacing::linear;
    }
    const auto& v = obj.at("spacing");
    if (v == "linear") return Spacing::linear;
    if (v == "log") return Spacing::log;
    throw ValidationError("'sweep.spacing' must be \"linear\" or \"log\"");
}

SweepAxis parse_sweep(const json& obj)
{
    check_keys(obj, "sweep", {"axis", "start", "stop", "points", "spacing"});
    for (const char* key : {"axis", "start", "stop", "points"}) {
        if (!obj.contains(key)) {
            throw ValidationError(std::string("missing key 'sweep.") + key + "'");
        }
    }
    if (!obj.at("axis").is_string()) {
        throw ValidationError("'sweep.axis' must be a string");
    }
    SweepAxis axis{obj.at("axis").get<std::string>(), number_at(obj, "sweep", "start"),
                   number_at(obj, "sweep", "stop"), integer_at(obj, "sweep", "points"), parse_spacing(obj)};
    if (!contains(sweep_axis_names(), axis.parameter)) {
        throw ValidationError("'sweep.axis' = '" + axis.parameter + "' is not a sweepable parameter");
    }
    if (axis.points < 1) {
        throw ValidationError("'sweep.points' must be >= 1");
    }
    if (axis.spacing == Spacing::log && !(axis.start > 0.0 && axis.stop > 0.0)) {
        throw ValidationError("log-spaced sweep needs 'sweep.start' and 'sweep.stop' > 0");
    }
    return axis;
}

}  // namespace

std::vector<double> SweepAxis::grid() const
{
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        const double t = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
        if (spacing == Spacing::linear) {
            out.push_back(i == points - 1 && points > 1 ? stop : start + t * (stop - start));
        } else {
            out.push_back(i == points - 1 && points > 1 ? stop : start * std::pow(stop / start, t));
        }
    }
    return out;
}

Scenario ScenarioSpec::resolve() const
{
    if (d_c_m && d_r_m) return Scenario{Meters{*d_c_m}, Meters{*d_r_m}};
    if (d_c_m && delta) return Scenario{Meters{*d_c_m}, Meters{*d_c_m / *delta}};
    if (d_r_m && delta) return Scenario{Meters{*delta * *d_r_m}, Meters{*d_r_m}};
    throw ValidationError("scenario needs exactly two of 'd_c_m', 'd_r_m', 'delta'");
}

Decibel TargetSpec::comm_db() const
{
    if (spectral_eff) return snr_from_spectral_efficiency(*spectral_eff);
    if (rho_c_db) return Decibel(*rho_c_db);
    throw ValidationError("missing communication target: set 'targets.spectral_eff' or 'targets.rho_c_db'");
}

Decibel TargetSpec::radar_db() const
{
    if (rho_r_db) return Decibel(*rho_r_db);
    if (detection) {
        // Single-sample requirement; integration enters through G_P.
        return required_snr_albersheim(DetectionSpec{detection->p_d, detection->p_fa, 1});
    }
    return Decibel(kDefaultRadarTargetDb);
}

CouplingState RunConfig::coupling() const
{
    if (beta < 1.0 && !alpha) {
        throw ValidationError("'coupling.alpha' is required when beta < 1");
    }
    try {
        return CouplingState(beta, alpha.value_or(1.0));
    } catch (const DomainError& e) {
        throw ValidationError(std::string("coupling: ") + e.what());
    }
}

RunConfig parse_config(std::string_view source, std::string_view base_preset)
{
    json doc;
    try {
        doc = json::parse(source);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed config document: ") + e.what());
    }
    check_keys(doc, "<root>", {"preset", "system", "coupling", "scenario", "targets", "sweep"});

    RunConfig cfg{std::string(base_preset), placeholder_params(), 1.0, std::nullopt, std::nullopt, std::nullopt,
                  std::nullopt};
    if (doc.contains("preset")) {
        if (!doc.at("preset").is_string()) {
            throw ValidationError("'preset' must be a string");
        }
        cfg.preset = doc.at("preset").get<std::string>();
    }
    bool explicit_g_p = false;
    cfg.system = parse_system(doc.contains("system") ? &doc.at("system") : nullptr, cfg.preset, explicit_g_p);

    if (doc.contains("coupling")) {
        const auto& c = doc.at("coupling");
        check_keys(c, "coupling", {"beta", "alpha"});
        cfg.beta = optional_number(c, "coupling", "beta").value_or(1.0);
        cfg.alpha = optional_number(c, "coupling", "alpha");
        require_unit_interval(cfg.beta, "coupling.beta");
        if (cfg.alpha) require_unit_interval(*cfg.alpha, "coupling.alpha");
    }
    (void)cfg.coupling();

    if (doc.contains("scenario")) cfg.scenario = parse_scenario(doc.at("scenario"));
    if (doc.contains("targets")) {
        cfg.targets = parse_targets(doc.at("targets"));
        if (cfg.targets->detection) {
            if (explicit_g_p) {
                throw ValidationError("targets.detection.n_samples sets the processing gain; drop the system g_p key");
            }
            cfg.system.g_p = LinearRatio(cfg.targets->detection->n_samples);
        }
    }
    if (doc.contains("sweep")) cfg.sweep = parse_sweep(doc.at("sweep"));
    return cfg;
}

RunConfig preset_config(std::string_view name) { return parse_config("{}", name); }

RunConfig load_config(const std::string& path, std::string_view base_preset)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) {
        throw IoError("error reading config file '" + path + "'");
    }
    return parse_config(ss.str(), base_preset);
}

const std::vector<std::string_view>& sweep_axis_names()
{
    static const std::vector<std::string_view> names = [] {
        std::vector<std::string_view> out(kSystemKeys.begin(), kSystemKeys.end());
        for (std::string_view k : {"beta", "alpha", "d_c_m", "d_r_m", "delta", "spectral_eff", "rho_c_db", "rho_r_db"}) {
            out.push_back(k);
        }
        return out;
    }();
    return names;
}

void set_system_value(SystemParams& p, std::string_view key, double value)
{
    try {
        if (key == "f_hz") p.freq_hz = value;
        else if (key == "b_hz") p.bandwidth_hz = value;
        else if (key == "p_dbm") p.power = dbm_to_watts(PowerDbm(value));
        else if (key == "p_w") p.power = PowerWatts(value);
        else if (key == "g_bs_lin") p.g_bs = LinearRatio(value);
        else if (key == "g_bs_db") p.g_bs = db_to_lin(Decibel(value));
        else if (key == "g_ue_lin") p.g_ue = LinearRatio(value);
        else if (key == "g_ue_db") p.g_ue = db_to_lin(Decibel(value));
        else if (key == "g_p_lin") p.g_p = LinearRatio(value);
        else if (key == "g_p_db") p.g_p = db_to_lin(Decibel(value));
        else if (key == "g_p_samples") {
            if (value < 1.0 || value != std::floor(value)) {
                throw DomainError("must be an integer >= 1");
            }
            p.g_p = LinearRatio(value);
        }
        else if (key == "sigma_rcs_m2") p.sigma_rcs_m2 = value;
        else if (key == "n_psd_dbm_hz") p.n_ue = p.n_bs = NoisePsd::from_dbm_per_hz(value);
        else if (key == "n_ue_psd_dbm_hz") p.n_ue = NoisePsd::from_dbm_per_hz(value);
        else if (key == "n_bs_psd_dbm_hz") p.n_bs = NoisePsd::from_dbm_per_hz(value);
        else throw ValidationError("unknown system key '" + std::string(key) + "'");
    } catch (const DomainError& e) {
        throw ValidationError("'system." + std::string(key) + "': " + e.what());
    }
}

void apply_parameter(RunConfig& cfg, std::string_view name, double value)
{
    if (contains(kSystemKeys, name)) {
        set_system_value(cfg.system, name, value);
        validate(cfg.system);
        return;
    }
    const std::string key(name);
    if (name == "beta") {
        require_unit_interval(value, key);
        cfg.beta = value;
        return;
    }
    if (name == "alpha") {
        require_unit_interval(value, key);
        cfg.alpha = value;
        return;
    }
    if (name == "d_c_m" || name == "d_r_m" || name == "delta") {
        if (!cfg.scenario) {
            throw ValidationError("sweep axis '" + key + "' needs a 'scenario' section");
        }
        require_positive(value, "scenario." + key);
        auto& s = *cfg.scenario;
        auto& slot = name == "d_c_m" ? s.d_c_m : name == "d_r_m" ? s.d_r_m : s.delta;
        if (!slot) {
            throw ValidationError("sweep axis '" + key + "' is not one of the two scenario keys given");
        }
        slot = value;
        return;
    }
    if (name == "spectral_eff" || name == "rho_c_db" || name == "rho_r_db") {
        if (!cfg.targets) {
            cfg.targets = TargetSpec{};
        }
        auto& t = *cfg.targets;
        if (name == "spectral_eff") {
            require_positive(value, "targets.spectral_eff");
            t.spectral_eff = value;
            t.rho_c_db.reset();
        } else if (name == "rho_c_db") {
            t.rho_c_db = value;
            t.spectral_eff.reset();
        } else {
            t.rho_r_db = value;
            t.detection.reset();
        }
        return;
    }
    throw ValidationError("unknown parameter '" + key + "'");
}

}  // namespace isac::report
