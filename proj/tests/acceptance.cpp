// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "isac/coupling.hpp"
#include "isac/detection.hpp"
#include "isac/errors.hpp"
#include "isac/link_budget.hpp"
#include "isac/range_planner.hpp"
#include "isac/report/presets.hpp"
#include "isac/report/reproduce.hpp"
#include "isac/sop.hpp"
#include "oracles.hpp"

using namespace isac;
using namespace isac::report;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

// All rows of an artifact whose quantity starts with prefix (every row if empty).
Outcome rows_within(std::string_view artifact, std::string_view prefix)
{
    const auto rep = reproduce(artifact);
    bool pass = true;
    int n = 0;
    double worst = 0.0;
    for (const auto& row : rep.rows) {
        if (!row.quantity.starts_with(prefix) || row.status == RowStatus::skip) continue;
        ++n;
        pass = pass && row.status == RowStatus::pass;
        const double err = row.kind == ToleranceKind::relative ? row.rel_error() : row.abs_error();
        worst = std::max(worst, err / row.tolerance);
    }
    return {pass && n > 0, std::to_string(n) + " values, worst error " + fmt("%.2f", worst) + " of tolerance"};
}

Outcome criterion1() { return rows_within("table3", ""); }

Outcome criterion2()
{
    auto out = rows_within("table4", "");
    const auto rep = reproduce("table4");
    out.pass = out.pass && rep.rows.size() == 6;
    return out;
}

Outcome criterion3()
{
    const auto rep = reproduce("fig5");
    std::string detail;
    bool pass = true;
    int n = 0;
    for (const auto& row : rep.rows) {
        if (!row.quantity.starts_with("rate at delta=1")) continue;
        ++n;
        pass = pass && row.abs_error() <= 0.3;
        detail += fmt("%.2f/", row.computed);
    }
    if (!detail.empty()) detail.pop_back();
    return {pass && n == 4, "R at delta=1: " + detail};
}

Outcome criterion4()
{
    const auto fc = CouplingState::fully_coupled();
    const Decibel radar(10.8);
    const auto lo = test::sub6(20.0);
    const auto hi = test::sub6(30.0);

    // Comm SNR at a fixed delta on both curves.
    double worst_snr = 0.0;
    for (double delta = 0.5; delta <= 200.0; delta *= 1.25) {
        auto comm_at = [&](const SystemParams& p) {
            const Meters d_r = solve_radar_range(p, fc.loss_radar(), db_to_lin(radar));
            return lin_to_db(comm_snr(p, fc.loss_comm(), Meters{delta * d_r.value})).value();
        };
        worst_snr = std::max(worst_snr, std::abs(comm_at(hi) - comm_at(lo) - 5.0));
    }

    // Rate gain for R >= 6 on the 20 dBm curve, the 30 dBm rate found by bisection.
    double min_gain = 1e9;
    double max_gain = -1e9;
    for (double r = 6.0; r <= 14.0 + 1e-12; r += 0.25) {
        const double delta = plan_ranges(lo, fc, r, radar).delta.value();
        const double gain = spectral_efficiency_at_delta(hi, fc, radar, delta, 0.01, 40.0, 1e-10) - r;
        min_gain = std::min(min_gain, gain);
        max_gain = std::max(max_gain, gain);
    }
    const bool pass = worst_snr <= 1e-9 && std::abs(min_gain - 1.67) <= 0.05 && std::abs(max_gain - 1.67) <= 0.05;
    return {pass, fmt("max |dSNR - 5| = %.1e dB, dR in [%.3f, %.3f]", worst_snr, min_gain, max_gain)};
}

Outcome criterion5()
{
    test::ParamGenerator gen(20240601);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const auto p = gen.params();
        const CouplingState coupling(gen.uniform(0.05, 1.0), gen.uniform(0.0, 1.0));
        const double delta = gen.log_uniform(0.05, 200.0);
        const Meters d_c{gen.log_uniform(1.0, 1e6)};
        const Decibel comm = lin_to_db(comm_snr(p, coupling.loss_comm(), d_c));
        const double sop = sop_radar_snr(p, coupling, comm, LinearRatio(delta)).value();
        const double direct = lin_to_db(radar_snr(p, coupling.loss_radar(), Meters{d_c.value / delta})).value();
        worst = std::max(worst, std::abs(sop - direct));
    }
    return {worst <= 1e-9, fmt("1000 configs, max deviation %.1e dB", worst)};
}

Outcome criterion6()
{
    const auto coupling = CouplingState(0.7, 0.4);
    const auto base = test::mmwave(25.0);
    const double h = 10.0;
    const double k = std::pow(10.0, h / 10.0);
    const LinearRatio delta(3.0);
    const double i0 = sop_intercept(base, coupling, delta).intercept_db.value();

    struct Coef {
        double expected;
        std::function<void(SystemParams&, double&)> bump;
    };
    const std::vector<Coef> coefs{
        {1.0, [&](SystemParams& p, double&) { p.bandwidth_hz *= k; }},
        {2.0, [&](SystemParams& p, double&) { p.freq_hz *= k; }},
        {1.0, [&](SystemParams& p, double&) { p.g_p = LinearRatio(p.g_p.value() * k); }},
        {1.0, [&](SystemParams& p, double&) { p.sigma_rcs_m2 *= k; }},
        {4.0, [&](SystemParams&, double& d) { d *= k; }},
        {-1.0, [&](SystemParams& p, double&) { p.power = PowerWatts(p.power.watts() * k); }},
        {-2.0, [&](SystemParams& p, double&) { p.g_ue = LinearRatio(p.g_ue.value() * k); }},
        {0.0, [&](SystemParams& p, double&) { p.g_bs = LinearRatio(p.g_bs.value() * k); }},
    };
    double worst_coef = 0.0;
    for (const auto& c : coefs) {
        auto p = base;
        double d = delta.value();
        c.bump(p, d);
        const double coef = (sop_intercept(p, coupling, LinearRatio(d)).intercept_db.value() - i0) / h;
        worst_coef = std::max(worst_coef, std::abs(coef - c.expected));
    }

    double worst_slope = 0.0;
    for (double x = -40.0; x <= 60.0; x += 5.0) {
        const double y0 = sop_radar_snr(base, coupling, Decibel(x), delta).value();
        const double y1 = sop_radar_snr(base, coupling, Decibel(x + 1.0), delta).value();
        worst_slope = std::max(worst_slope, std::abs(y1 - y0 - 2.0));
    }
    return {worst_coef <= 1e-6 && worst_slope <= 1e-9,
            fmt("coefficient error %.1e, slope error %.1e dB", worst_coef, worst_slope)};
}

Outcome criterion7()
{
    const auto p = test::subthz(30.0);
    const TargetSnrs targets{Decibel(6.0), Decibel(10.8)};
    const double delta_full = delta_db(p, CouplingState::fully_coupled(), targets).value();

    double worst_sum = 0.0;
    double worst_pair = 0.0;
    double worst_shift = 0.0;
    bool exact_zero = true;
    for (int i = 0; i <= 100; ++i) {
        for (int j = 0; j <= 100; ++j) {
            const double beta = i / 100.0;
            const double alpha = j / 100.0;
            if (beta == 0.0 && (alpha == 0.0 || alpha == 1.0)) continue;  // a zero loss factor
            const CouplingState s(beta, alpha);
            const double lc = s.loss_comm().value();
            const double lr = s.loss_radar().value();
            worst_sum = std::max(worst_sum, std::abs(test::db(lc + lr) - test::db(1.0 + beta)));
            worst_pair = std::max(worst_pair, std::abs(loss_pair_db(beta, lin_to_db(s.loss_comm())).value() -
                                                       test::db(lr)));
            const double shift = delta_db(p, s, targets).value() - delta_full;
            worst_shift = std::max(worst_shift, std::abs(shift - delta_beta(beta, alpha).value()));
            if (i == 100) exact_zero = exact_zero && delta_beta(beta, alpha).value() == 0.0;
        }
    }
    const bool pass = worst_sum <= 1e-9 && worst_pair <= 1e-9 && worst_shift <= 1e-9 && exact_zero;
    return {pass, fmt("101x101 grid: sum %.1e dB, pair %.1e dB, delta shift %.1e dB", worst_sum, worst_pair,
                      worst_shift) +
                      (exact_zero ? ", delta_beta(1, alpha) = 0" : ", delta_beta(1, alpha) != 0")};
}

Outcome criterion8()
{
    const double alb = required_snr_albersheim({0.9, 1e-3, 1}).value();
    const double exact = required_snr_exact(0.9, 1e-3).value();
    const double gp = processing_gain(1024).value();
    const bool pass = std::abs(alb - 10.8) <= 0.3 && std::abs(alb - exact) <= 0.4 && std::abs(gp - 30.10) <= 0.01;
    return {pass, fmt("Albersheim %.3f dB, exact %.3f dB, G_P(1024) %.3f dB", alb, exact, gp)};
}

Outcome criterion9()
{
    const auto rep = reproduce("fig4");
    const auto radar = std::find_if(rep.rows.begin(), rep.rows.end(),
                                    [](const ReproRow& r) { return r.quantity.starts_with("radar_db config4"); });
    const auto comm = std::find_if(rep.rows.begin(), rep.rows.end(),
                                   [](const ReproRow& r) { return r.quantity.starts_with("comm_db config4"); });
    if (radar == rep.rows.end() || comm == rep.rows.end()) {
        return {false, "config4 rows missing"};
    }
    const bool pass = std::abs(radar->computed - -17.4) <= 0.2 && comm->status == RowStatus::skip;
    return {pass, fmt("radar %.2f dB; comm %.2f dB reported, excluded", radar->computed, comm->computed)};
}

}  // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"table3 radar ranges within 1%", criterion1},
        {"table4 ratios and user ranges within 10%", criterion2},
        {"delta = 1 crossings within 0.3 bits/s/Hz", criterion3},
        {"power-rate rule", criterion4},
        {"operating-line closed loop", criterion5},
        {"operating-line coefficients and slope", criterion6},
        {"coupling algebra", criterion7},
        {"detection", criterion8},
        {"config4 radar point", criterion9},
    };
    int failures = 0;
    int index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        Outcome out;
        try {
            out = run();
        } catch (const std::exception& e) {
            out = {false, std::string("threw: ") + e.what()};
        }
        failures += out.pass ? 0 : 1;
        std::printf("%s %d %s: %s\n", out.pass ? "PASS" : "FAIL", index, name, out.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", index - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
