#include "isac/report/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>

#include <json.hpp>

#include "isac/detection.hpp"
#include "isac/errors.hpp"
#include "isac/range_planner.hpp"
#include "isac/report/config.hpp"
#include "isac/report/presets.hpp"

namespace isac::report {

namespace {

constexpr int kIntegratedSamples = 1024;
constexpr double kRadarTargetDb = 10.8;
constexpr double kTable4Rate = 2.0;
constexpr double kFig4DistanceM = 500.0;

struct Band {
    std::string_view preset;
    std::string_view label;
};

constexpr Band kRangeBands[] = {{"sub6", "sub-6 GHz"}, {"mmwave", "mmWave"}, {"subthz", "sub-THz"}};

SystemParams band_params(std::string_view preset, double p_dbm, int samples = kIntegratedSamples)
{
    SystemParams p = *find_preset(preset);
    p.power = dbm_to_watts(PowerDbm(p_dbm));
    p.g_p = db_to_lin(processing_gain(samples));
    return p;
}

RowStatus judge(const ReproRow& row)
{
    const double err = row.kind == ToleranceKind::relative ? row.rel_error() : row.abs_error();
    return err <= row.tolerance ? RowStatus::pass : RowStatus::fail;
}

ReproRow compare(std::string quantity, double reference, double computed, double tol, ToleranceKind kind,
                 std::string note = {})
{
    ReproRow row{std::move(quantity), reference, computed, tol, kind, RowStatus::fail, std::move(note)};
    row.status = judge(row);
    return row;
}

std::string power_label(double p_dbm) { return std::to_string(static_cast<int>(p_dbm)) + " dBm"; }

ReproReport table3()
{
    ReproReport rep{"table3", {}};
    const double reference[2][3] = {{1442.0, 513.4, 119.4}, {811.5, 288.6, 67.1}};
    const double powers[2] = {30.0, 20.0};
    const auto coupling = CouplingState::fully_coupled();
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 3; ++j) {
            const auto params = band_params(kRangeBands[j].preset, powers[i]);
            const Meters d_r =
                solve_radar_range(params, coupling.loss_radar(), db_to_lin(Decibel(kRadarTargetDb)));
            rep.rows.push_back(compare("d_r_m " + std::string(kRangeBands[j].label) + " " + power_label(powers[i]),
                                       reference[i][j], d_r.value, 0.01, ToleranceKind::relative));
        }
    }
    return rep;
}

ReproReport table4()
{
    ReproReport rep{"table4", {}};
    const double reference_delta[3] = {30.0, 5.0, 2.7};
    const double reference_dc[3] = {24345.0, 1443.0, 181.2};
    const auto coupling = CouplingState::fully_coupled();
    for (int j = 0; j < 3; ++j) {
        const auto params = band_params(kRangeBands[j].preset, 20.0);
        const RangePlan plan = plan_ranges(params, coupling, kTable4Rate, Decibel(kRadarTargetDb));
        const std::string label = std::string(kRangeBands[j].label) + " R=2 20 dBm";
        rep.rows.push_back(compare("delta " + label, reference_delta[j], plan.delta.value(), 0.10, ToleranceKind::relative));
        rep.rows.push_back(compare("d_c_m " + label, reference_dc[j], plan.d_c.value, 0.10, ToleranceKind::relative));
    }
    return rep;
}

ReproReport fig4()
{
    ReproReport rep{"fig4", {}};
    const auto coupling = CouplingState::fully_coupled();
    const Meters d{kFig4DistanceM};
    std::vector<std::pair<double, double>> snr;  // (comm dB, radar dB) per config, 30 dBm, G_P = 1
    for (const char* name : {"config1", "config2", "config3", "config4"}) {
        const auto p = *find_preset(name);
        snr.emplace_back(lin_to_db(comm_snr(p, coupling.loss_comm(), d)).value(),
                         lin_to_db(radar_snr(p, coupling.loss_radar(), d)).value());
    }
    rep.rows.push_back(compare("radar_db config4 d=500 m", -17.4, snr[3].second, 0.2, ToleranceKind::absolute,
                               "assumes P = 30 dBm, G_P = 0 dB"));
    ReproRow comm{"comm_db config4 d=500 m", 17.5, snr[3].first, 0.2, ToleranceKind::absolute, RowStatus::skip,
                  "not reproducible with G_UE = 4; differs by about 10*log10(G_UE)"};
    rep.rows.push_back(comm);
    rep.rows.push_back(compare("comm_db change config1->config2", -20.0, snr[1].first - snr[0].first, 0.01,
                               ToleranceKind::absolute));
    rep.rows.push_back(compare("radar_db change config1->config2", -20.0, snr[1].second - snr[0].second, 0.01,
                               ToleranceKind::absolute));
    rep.rows.push_back(compare("comm_db change config2->config3", 10.0, snr[2].first - snr[1].first, 0.01,
                               ToleranceKind::absolute));
    rep.rows.push_back(compare("radar_db change config2->config3", 20.0, snr[2].second - snr[1].second, 0.01,
                               ToleranceKind::absolute));
    rep.rows.push_back(compare("radar_db change config1->config3", 0.0, snr[2].second - snr[0].second, 0.01,
                               ToleranceKind::absolute));
    rep.rows.push_back(compare("radar_db change config2->config4", 0.0, snr[3].second - snr[1].second, 0.01,
                               ToleranceKind::absolute));
    return rep;
}

ReproReport fig5()
{
    ReproReport rep{"fig5", {}};
    const auto coupling = CouplingState::fully_coupled();
    const Decibel radar_target(kRadarTargetDb);

    struct Crossing {
        std::string_view preset;
        std::string_view label;
        double p_dbm;
        double reference_rate;
    };
    const Crossing crossings[] = {{"sub6", "sub-6 GHz", 30.0, 12.9},
                                  {"sub6", "sub-6 GHz", 20.0, 11.2},
                                  {"mmwave", "mmWave", 30.0, 8.0},
                                  {"subthz", "sub-THz", 30.0, 6.0}};
    for (const auto& c : crossings) {
        const double r = spectral_efficiency_at_delta(band_params(c.preset, c.p_dbm), coupling, radar_target, 1.0);
        rep.rows.push_back(compare("rate at delta=1 " + std::string(c.label) + " " + power_label(c.p_dbm),
                                   c.reference_rate, r, 0.3, ToleranceKind::absolute));
    }

    const auto sub6 = plan_ranges(band_params("sub6", 30.0), coupling, 8.0, radar_target);
    rep.rows.push_back(compare("delta sub-6 GHz 30 dBm R=8", 5.4, sub6.delta.value(), 0.10, ToleranceKind::relative));
    rep.rows.push_back(compare("d_c_m sub-6 GHz 30 dBm R=8", 7786.0, sub6.d_c.value, 0.10, ToleranceKind::relative));
    const auto mmwave = plan_ranges(band_params("mmwave", 30.0), coupling, 8.0, radar_target);
    rep.rows.push_back(
        compare("delta mmWave 30 dBm R=8", 1.0, mmwave.delta.value(), 0.10, ToleranceKind::relative));

    // Rate lost per 10 dB of transmit power, read off both sub-6 GHz curves at
    // the delta where the 20 dBm curve reaches R = 8.
    const auto low = band_params("sub6", 20.0);
    const double delta_at_8 = plan_ranges(low, coupling, 8.0, radar_target).delta.value();
    const double r_high =
        spectral_efficiency_at_delta(band_params("sub6", 30.0), coupling, radar_target, delta_at_8, 0.01, 40.0, 1e-9);
    rep.rows.push_back(compare("rate drop per 10 dB sub-6 GHz at R=8", 1.67, r_high - 8.0, 0.05,
                               ToleranceKind::absolute));
    return rep;
}

const char* status_name(RowStatus s)
{
    switch (s) {
        case RowStatus::pass: return "PASS";
        case RowStatus::fail: return "FAIL";
        case RowStatus::skip: return "SKIP";
    }
    return "?";
}

const char* kind_name(ToleranceKind k) { return k == ToleranceKind::relative ? "relative" : "absolute"; }

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c;
        if (c == '"') out += '"';
    }
    return out + "\"";
}

}  // namespace

double ReproRow::abs_error() const { return std::abs(computed - reference_value); }

double ReproRow::rel_error() const
{
    return reference_value == 0.0 ? abs_error() : abs_error() / std::abs(reference_value);
}

bool ReproReport::passed() const
{
    return std::none_of(rows.begin(), rows.end(), [](const ReproRow& r) { return r.status == RowStatus::fail; });
}

void scale_tolerances(ReproReport& report, double scale)
{
    if (!(std::isfinite(scale) && scale > 0.0)) {
        throw ValidationError("tolerance scale must be finite and > 0, got " + std::to_string(scale));
    }
    for (auto& row : report.rows) {
        row.tolerance *= scale;
        if (row.status != RowStatus::skip) row.status = judge(row);
    }
}

const std::vector<std::string_view>& reproducible_artifacts()
{
    static const std::vector<std::string_view> names{"table3", "table4", "fig4", "fig5"};
    return names;
}

ReproReport reproduce(std::string_view artifact)
{
    if (artifact == "table3") return table3();
    if (artifact == "table4") return table4();
    if (artifact == "fig4") return fig4();
    if (artifact == "fig5") return fig5();
    throw ValidationError("unknown artifact '" + std::string(artifact) + "' (expected table3, table4, fig4 or fig5)");
}

double spectral_efficiency_at_delta(const SystemParams& params, const CouplingState& coupling,
                                    Decibel radar_target_db, double target_delta, double lo, double hi, double tol)
{
    auto excess = [&](double r) {
        return plan_ranges(params, coupling, r, radar_target_db).delta.value() - target_delta;
    };
    if (excess(lo) < 0.0 || excess(hi) > 0.0) {
        throw DomainError("distance ratio " + std::to_string(target_delta) + " is not reached for rates in [" +
                          std::to_string(lo) + ", " + std::to_string(hi) + "] bits/s/Hz");
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (excess(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

void write_report(std::ostream& out, Format format, const ReproReport& report)
{
    if (format == Format::csv) {
        out << "artifact,quantity,reference_value,computed,abs_error,rel_error,tolerance,tolerance_kind,status,note\n";
        for (const auto& r : report.rows) {
            out << report.artifact << ',' << csv_field(r.quantity) << ',' << format_number(r.reference_value) << ','
                << format_number(r.computed) << ',' << format_number(r.abs_error()) << ','
                << format_number(r.rel_error()) << ',' << format_number(r.tolerance) << ',' << kind_name(r.kind)
                << ',' << status_name(r.status) << ',' << csv_field(r.note) << '\n';
        }
        return;
    }
    nlohmann::ordered_json doc;
    doc["artifact"] = report.artifact;
    doc["passed"] = report.passed();
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : report.rows) {
        doc["rows"].push_back({{"quantity", r.quantity},
                               {"reference_value", r.reference_value},
                               {"computed", r.computed},
                               {"abs_error", r.abs_error()},
                               {"rel_error", r.rel_error()},
                               {"tolerance", r.tolerance},
                               {"tolerance_kind", kind_name(r.kind)},
                               {"status", status_name(r.status)},
                               {"note", r.note}});
    }
    out << doc.dump(2) << '\n';
}

void write_report_text(std::ostream& out, const ReproReport& report)
{
    for (const auto& r : report.rows) {
        out << status_name(r.status) << "  " << std::left << std::setw(42) << r.quantity << std::right
            << " ref   " << std::setw(10) << format_number(r.reference_value) << "  computed " << std::setprecision(6)
            << std::setw(12) << r.computed << "  tol " << format_number(r.tolerance)
            << (r.kind == ToleranceKind::relative ? " rel" : " abs");
        if (!r.note.empty()) out << "  (" << r.note << ")";
        out << '\n';
    }
    out << report.artifact << ": " << (report.passed() ? "PASS" : "FAIL") << '\n';
}

}  // namespace isac::report
