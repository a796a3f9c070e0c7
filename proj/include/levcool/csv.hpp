#ifndef LEVCOOL_CSV_HPP
#define LEVCOOL_CSV_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace levcool {

using CsvCell = std::variant<double, std::int64_t, std::string>;
using CsvRow = std::vector<CsvCell>;

struct CsvTable {
    std::vector<std::string> columns;
    std::vector<CsvRow> rows;
};

// Doubles at 17 significant digits ("nan", "inf", "-inf" for non-finite values),
// strings quoted when they contain a comma, quote or newline. LF line endings.
std::string format_cell(const CsvCell& cell);

// Throws ValidationError on duplicate column names or ragged rows.
void write_csv(std::ostream& out, const CsvTable& table);

// Same, to a file. I/O failures throw std::runtime_error naming the path.
void emit_csv(const CsvTable& table, const std::filesystem::path& path);

// Minimal reader for files produced by write_csv; every field returned as text.
struct CsvText {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};
CsvText read_csv(std::istream& in);
CsvText read_csv(const std::filesystem::path& path);

// Parses a numeric field as written by format_cell (including nan/inf).
double parse_double_field(const std::string& text);

}  // namespace levcool

#endif  // LEVCOOL_CSV_HPP
