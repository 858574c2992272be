#include "isac/report/output.hpp"

#include <array>
#include <charconv>

#include <json.hpp>

#include "isac/errors.hpp"

namespace isac::report {

Format parse_format(std::string_view name)
{
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    throw ValidationError("--format must be csv or json, got '" + std::string(name) + "'");
}

std::string format_number(double v)
{
    std::array<char, 64> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc{}) {
        throw InternalError("number formatting failed");
    }
    return std::string(buf.data(), end);
}

void write_table(std::ostream& out, Format format, const NumericTable& table)
{
    if (format == Format::csv) {
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
            out << (i ? "," : "") << table.columns[i];
        }
        out << '\n';
        for (const auto& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                out << (i ? "," : "") << format_number(row[i]);
            }
            out << '\n';
        }
        return;
    }
    auto arr = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < row.size(); ++i) {
            obj[table.columns[i]] = row[i];
        }
        arr.push_back(std::move(obj));
    }
    out << arr.dump(2) << '\n';
}

}  // namespace isac::report
