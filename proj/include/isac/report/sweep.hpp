#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "isac/report/config.hpp"
#include "isac/report/evaluate.hpp"
#include "isac/report/output.hpp"

namespace isac::report {

/// Bumped whenever the sweep columns change.
inline constexpr int kSweepFormatVersion = 1;

/// Column names of sweep output, in emission order.
const std::vector<std::string>& sweep_columns();

/**
 * Evaluates the configured sweep axis at every grid point.
 *
 * A config with a "scenario" section (or a scenario axis) sweeps SNRs at
 * fixed distances; one with a "targets" section (or a target axis) sweeps
 * range plans. Points are evaluated concurrently and returned in grid order.
 * Domain and validation errors are rethrown with the offending grid point
 * named in the message.
 */
NumericTable evaluate_sweep(const RunConfig& config, unsigned threads = 0);

/// evaluate_sweep followed by write_table; returns the number of rows written.
std::size_t run_sweep(const RunConfig& config, std::ostream& out, Format format = Format::csv);

}  // namespace isac::report
