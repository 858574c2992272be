#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace isac::report {

enum class Format { csv, json };

/// Parses "csv" or "json"; throws ValidationError otherwise.
Format parse_format(std::string_view name);

/// Shortest decimal text that round-trips to the same double.
std::string format_number(double v);

/// A table of numeric rows under fixed column names.
struct NumericTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// CSV: header line then one line per row. JSON: an array of objects keyed by column.
void write_table(std::ostream& out, Format format, const NumericTable& table);

}  // namespace isac::report
