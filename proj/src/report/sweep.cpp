#include "isac/report/sweep.hpp"

#include <algorithm>
#include <exception>
#include <optional>
#include <thread>

#include "isac/errors.hpp"

namespace isac::report {

namespace {

enum class Mode { scenario, targets };

bool is_scenario_axis(const std::string& axis) { return axis == "d_c_m" || axis == "d_r_m" || axis == "delta"; }

bool is_target_axis(const std::string& axis)
{
    return axis == "spectral_eff" || axis == "rho_c_db" || axis == "rho_r_db";
}

Mode sweep_mode(const RunConfig& config)
{
    const auto& axis = config.sweep->parameter;
    const bool scenario = config.scenario.has_value() || is_scenario_axis(axis);
    const bool targets = config.targets.has_value() || is_target_axis(axis);
    if (scenario == targets) {
        throw ValidationError("sweep needs exactly one of a 'scenario' or a 'targets' section");
    }
    return scenario ? Mode::scenario : Mode::targets;
}

std::vector<double> to_row(double axis_value, const PointResult& r)
{
    return {axis_value, r.rho_c_db, r.rho_r_db, r.delta_lin, r.d_c_m, r.d_r_m, r.spectral_eff};
}

[[noreturn]] void rethrow_annotated(const std::exception_ptr& error, const std::string& where)
{
    try {
        std::rethrow_exception(error);
    } catch (const DomainError& e) {
        throw DomainError(where + ": " + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError(where + ": " + e.what());
    }
}

}  // namespace

const std::vector<std::string>& sweep_columns()
{
    static const std::vector<std::string> columns{"axis_value", "rho_c_db", "rho_r_db",    "delta_lin",
                                                  "d_c_m",      "d_r_m",    "spectral_eff"};
    return columns;
}

NumericTable evaluate_sweep(const RunConfig& config, unsigned threads)
{
    if (!config.sweep) {
        throw ValidationError("missing 'sweep' section");
    }
    const Mode mode = sweep_mode(config);
    const std::vector<double> grid = config.sweep->grid();

    std::vector<std::optional<PointResult>> results(grid.size());
    std::vector<std::exception_ptr> errors(grid.size());

    auto evaluate_point = [&](std::size_t i) {
        try {
            RunConfig point = config;
            apply_parameter(point, config.sweep->parameter, grid[i]);
            results[i] = mode == Mode::scenario ? evaluate_scenario(point) : evaluate_targets(point);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };

    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, grid.size()));
    if (threads <= 1) {
        for (std::size_t i = 0; i < grid.size(); ++i) evaluate_point(i);
    } else {
        std::vector<std::jthread> workers;
        workers.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            workers.emplace_back([&, t] {
                for (std::size_t i = t; i < grid.size(); i += threads) evaluate_point(i);
            });
        }
    }

    NumericTable table{sweep_columns(), {}};
    table.rows.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (errors[i]) {
            rethrow_annotated(errors[i], "sweep point " + std::to_string(i) + " (" + config.sweep->parameter + " = " +
                                             format_number(grid[i]) + ")");
        }
        table.rows.push_back(to_row(grid[i], *results[i]));
    }
    return table;
}

std::size_t run_sweep(const RunConfig& config, std::ostream& out, Format format)
{
    const NumericTable table = evaluate_sweep(config);
    write_table(out, format, table);
    if (!out) {
        throw IoError("failed to write sweep output");
    }
    return table.rows.size();
}

}  // namespace isac::report
