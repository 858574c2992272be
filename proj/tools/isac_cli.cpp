// isac: command-line front end for the ISAC link-budget engine.
//
// Exit codes: 0 success, 1 validation or domain error, 2 I/O or parse error,
// 3 reproduction mismatch.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "isac/detection.hpp"
#include "isac/errors.hpp"
#include "isac/range_planner.hpp"
#include "isac/report/config.hpp"
#include "isac/report/evaluate.hpp"
#include "isac/report/presets.hpp"
#include "isac/report/reproduce.hpp"
#include "isac/report/sweep.hpp"
#include "isac/sop.hpp"

namespace {

using namespace isac;
using namespace isac::report;

enum ExitCode : int { kOk = 0, kDomain = 1, kIo = 2, kMismatch = 3 };

struct Options {
    std::string config_path;
    std::string preset;
    std::string output = "-";
    std::string format;
    bool quiet = false;
};

RunConfig load(const Options& opt)
{
    if (!opt.config_path.empty()) {
        return load_config(opt.config_path, opt.preset);
    }
    if (!opt.preset.empty()) {
        return preset_config(opt.preset);
    }
    throw ValidationError("give --config <path> or --preset <name>");
}

// Opens --output; "-" means stdout.
class OutputSink {
public:
    explicit OutputSink(const std::string& path)
    {
        if (path != "-") {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) {
                throw IoError("cannot open output file '" + path + "'");
            }
        }
    }

    std::ostream& stream() { return file_ ? *file_ : std::cout; }

    void finish()
    {
        stream().flush();
        if (!stream()) {
            throw IoError("failed to write output");
        }
    }

private:
    std::unique_ptr<std::ofstream> file_;
};

Format format_of(const Options& opt) { return opt.format.empty() ? Format::csv : parse_format(opt.format); }

void emit(const Options& opt, const NumericTable& table)
{
    if (opt.quiet) return;
    OutputSink sink(opt.output);
    write_table(sink.stream(), format_of(opt), table);
    sink.finish();
}

std::vector<double> point_row(const PointResult& r)
{
    return {r.rho_c_db, r.rho_r_db, r.delta_lin, r.d_c_m, r.d_r_m, r.spectral_eff};
}

int cmd_snr(const Options& opt)
{
    const auto cfg = load(opt);
    if (cfg.targets) throw ValidationError("'snr' takes a 'scenario' section, not 'targets'");
    emit(opt, {{"rho_c_db", "rho_r_db", "delta_lin", "d_c_m", "d_r_m", "spectral_eff"},
               {point_row(evaluate_scenario(cfg))}});
    return kOk;
}

int cmd_sop(const Options& opt)
{
    const auto cfg = load(opt);
    if (cfg.targets) throw ValidationError("'sop' takes a 'scenario' section, not 'targets'");
    const auto point = evaluate_scenario(cfg);
    const auto coupling = cfg.coupling();
    const LinearRatio delta(point.delta_lin);
    const SopLine line = sop_intercept(cfg.system, coupling, delta);
    const Decibel radar = sop_radar_snr(cfg.system, coupling, Decibel(point.rho_c_db), delta);
    emit(opt, {{"delta_lin", "slope", "intercept_db", "rho_c_db", "rho_r_db"},
               {{delta.value(), SopLine::slope, line.intercept_db.value(), point.rho_c_db, radar.value()}}});
    return kOk;
}

int cmd_range(const Options& opt)
{
    const auto cfg = load(opt);
    if (cfg.scenario) throw ValidationError("'range' takes a 'targets' section, not 'scenario'");
    if (!cfg.targets) throw ValidationError("'range' needs a 'targets' section");
    const auto point = evaluate_targets(cfg);
    const auto coupling = cfg.coupling();
    emit(opt, {{"rho_c_db", "rho_r_db", "delta_lin", "delta_db", "delta_beta_db", "d_c_m", "d_r_m", "spectral_eff"},
               {{point.rho_c_db, point.rho_r_db, point.delta_lin, lin_to_db(LinearRatio(point.delta_lin)).value(),
                 delta_beta(coupling.beta(), coupling.alpha()).value(), point.d_c_m, point.d_r_m,
                 point.spectral_eff}}});
    return kOk;
}

int cmd_detect(const Options& opt, std::optional<double> p_d, std::optional<double> p_fa, std::optional<int> n)
{
    DetectionSpec spec{0.9, 1e-3, 1};
    if (!opt.config_path.empty() || !opt.preset.empty()) {
        const auto cfg = load(opt);
        if (cfg.targets && cfg.targets->detection) spec = *cfg.targets->detection;
    }
    if (p_d) spec.p_d = *p_d;
    if (p_fa) spec.p_fa = *p_fa;
    if (n) spec.n_samples = *n;
    validate(spec);

    const double single = required_snr_albersheim(DetectionSpec{spec.p_d, spec.p_fa, 1}).value();
    const double integrated = required_snr_albersheim(spec).value();
    const double exact = required_snr_exact(spec.p_d, spec.p_fa).value();
    emit(opt, {{"p_d", "p_fa", "n_samples", "processing_gain_db", "albersheim_single_db", "albersheim_integrated_db",
                "exact_single_db", "reference_db"},
               {{spec.p_d, spec.p_fa, static_cast<double>(spec.n_samples), processing_gain(spec.n_samples).value(),
                 single, integrated, exact, kDefaultRadarTargetDb}}});
    return kOk;
}

int cmd_sweep(const Options& opt)
{
    const auto cfg = load(opt);
    if (opt.quiet) {
        (void)evaluate_sweep(cfg);
        return kOk;
    }
    OutputSink sink(opt.output);
    run_sweep(cfg, sink.stream(), format_of(opt));
    sink.finish();
    return kOk;
}

int cmd_reproduce(const Options& opt, const std::string& artifact, double tolerance_scale)
{
    std::vector<ReproReport> reports;
    if (artifact == "all") {
        for (auto name : reproducible_artifacts()) reports.push_back(reproduce(name));
    } else {
        reports.push_back(reproduce(artifact));
    }
    bool ok = true;
    for (auto& r : reports) {
        if (tolerance_scale != 1.0) scale_tolerances(r, tolerance_scale);
        ok = ok && r.passed();
    }

    if (!opt.quiet) {
        OutputSink sink(opt.output);
        for (const auto& r : reports) {
            if (opt.format.empty()) {
                write_report_text(sink.stream(), r);
            } else {
                write_report(sink.stream(), parse_format(opt.format), r);
            }
        }
        sink.finish();
    }
    return ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"ISAC link-budget engine: SNR, SNR operating point, range planning and detection requirements"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&opt](CLI::App* cmd) {
        cmd->add_option("--config", opt.config_path, "JSON configuration file");
        cmd->add_option("--preset", opt.preset, "built-in parameter set (config1..config4, sub6, mmwave, subthz)");
        cmd->add_option("--output", opt.output, "output path, '-' for stdout");
        cmd->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"csv", "json"}));
        cmd->add_flag("--quiet", opt.quiet, "suppress output; only the exit code reports the result");
    };

    auto* snr = app.add_subcommand("snr", "communication and radar SNR at a scenario");
    auto* sop = app.add_subcommand("sop", "SNR operating line and point for a scenario");
    auto* range = app.add_subcommand("range", "distance ratio and ranges for target SNRs");
    auto* detect = app.add_subcommand("detect", "radar detection requirement");
    auto* sweep = app.add_subcommand("sweep", "evaluate a parameter sweep");
    auto* repro = app.add_subcommand("reproduce", "compare computed values with published ones");
    for (auto* cmd : {snr, sop, range, detect, sweep, repro}) add_common(cmd);

    std::optional<double> p_d;
    std::optional<double> p_fa;
    std::optional<int> samples;
    detect->add_option("--pd", p_d, "probability of detection");
    detect->add_option("--pfa", p_fa, "probability of false alarm");
    detect->add_option("--samples", samples, "number of integrated samples");

    std::string artifact;
    repro->add_option("artifact", artifact, "table3, table4, fig4, fig5 or all")
        ->required()
        ->check(CLI::IsMember({"table3", "table4", "fig4", "fig5", "all"}));
    double tolerance_scale = 1.0;
    repro->add_option("--tolerance-scale", tolerance_scale, "multiply every tolerance by this factor")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kIo;
    }

    try {
        if (*snr) return cmd_snr(opt);
        if (*sop) return cmd_sop(opt);
        if (*range) return cmd_range(opt);
        if (*detect) return cmd_detect(opt, p_d, p_fa, samples);
        if (*sweep) return cmd_sweep(opt);
        if (*repro) return cmd_reproduce(opt, artifact, tolerance_scale);
    } catch (const ParseError& e) {
        std::cerr << "isac: parse error: " << e.what() << '\n';
        return kIo;
    } catch (const IoError& e) {
        std::cerr << "isac: I/O error: " << e.what() << '\n';
        return kIo;
    } catch (const ValidationError& e) {
        std::cerr << "isac: invalid configuration: " << e.what() << '\n';
        return kDomain;
    } catch (const DomainError& e) {
        std::cerr << "isac: domain error: " << e.what() << '\n';
        return kDomain;
    } catch (const InternalError& e) {
        std::cerr << "isac: " << e.what() << '\n';
        return kDomain;
    }
    return kOk;
}
