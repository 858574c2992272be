#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "isac/coupling.hpp"
#include "isac/link_budget.hpp"
#include "isac/report/output.hpp"

namespace isac::report {

enum class ToleranceKind { relative, absolute };
enum class RowStatus { pass, fail, skip };

/// One published value compared against its recomputation.
struct ReproRow {
    std::string quantity;
    double reference_value;
    double computed;
    double tolerance;
    ToleranceKind kind;
    RowStatus status;
    std::string note;

    [[nodiscard]] double abs_error() const;
    [[nodiscard]] double rel_error() const;
};

struct ReproReport {
    std::string artifact;
    std::vector<ReproRow> rows;

    /// True iff no row failed; skipped rows do not count.
    [[nodiscard]] bool passed() const;
};

/// Artifacts accepted by reproduce(), in display order.
const std::vector<std::string_view>& reproducible_artifacts();

/// Throws ValidationError for an unknown artifact name.
ReproReport reproduce(std::string_view artifact);

/// Multiplies every row tolerance by scale (> 0) and re-derives pass/fail.
/// Skipped rows stay skipped.
void scale_tolerances(ReproReport& report, double scale);

/**
 * Spectral efficiency at which the distance ratio equals target_delta,
 * located by bisection on [lo, hi] bits/s/Hz to within tol. The ratio
 * decreases strictly with the rate, so the root is unique when bracketed;
 * throws DomainError otherwise.
 */
double spectral_efficiency_at_delta(const SystemParams& params, const CouplingState& coupling,
                                    Decibel radar_target_db, double target_delta, double lo = 0.01,
                                    double hi = 40.0, double tol = 0.01);

/// Writes a report as CSV or JSON.
void write_report(std::ostream& out, Format format, const ReproReport& report);

/// Human-readable summary, one line per row plus an overall verdict.
void write_report_text(std::ostream& out, const ReproReport& report);

}  // namespace isac::report
