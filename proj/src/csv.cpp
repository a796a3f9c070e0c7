#include "levcool/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "levcool/errors.hpp"

namespace levcool {

namespace {

std::string format_double(double v)
{
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::string quote_if_needed(const std::string& s)
{
    if (s.find_first_of(",\"\n\r") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

std::vector<std::string> split_record(const std::string& line)
{
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                field += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else {
            field += c;
        }
    }
    fields.push_back(std::move(field));
    return fields;
}

}  // namespace

std::string format_cell(const CsvCell& cell)
{
    if (const auto* d = std::get_if<double>(&cell)) {
        return format_double(*d);
    }
    if (const auto* i = std::get_if<std::int64_t>(&cell)) {
        return std::to_string(*i);
    }
    return quote_if_needed(std::get<std::string>(cell));
}

void write_csv(std::ostream& out, const CsvTable& table)
{
    std::set<std::string> unique(table.columns.begin(), table.columns.end());
    if (unique.size() != table.columns.size()) {
        throw ValidationError("CSV schema has duplicate column names");
    }
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out << (i ? "," : "") << quote_if_needed(table.columns[i]);
    }
    out << '\n';
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size()) {
            throw ValidationError("CSV row width does not match schema");
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << format_cell(row[i]);
        }
        out << '\n';
    }
}

void emit_csv(const CsvTable& table, const std::filesystem::path& path)
{
    std::ostringstream buffer;
    write_csv(buffer, table);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    }
    out << buffer.str();
    out.flush();
    if (!out) {
        throw std::runtime_error("write failed for '" + path.string() + "'");
    }
}

CsvText read_csv(std::istream& in)
{
    CsvText out;
    std::string line;
    if (!std::getline(in, line)) {
        return out;
    }
    out.columns = split_record(line);
    while (std::getline(in, line)) {
        if (!line.empty()) {
            out.rows.push_back(split_record(line));
        }
    }
    return out;
}

CsvText read_csv(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path.string() + "' for reading");
    }
    return read_csv(in);
}

double parse_double_field(const std::string& text)
{
    if (text == "nan") return std::nan("");
    if (text == "inf") return INFINITY;
    if (text == "-inf") return -INFINITY;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ValidationError("not a number: '" + text + "'");
    }
    return v;
}

}  // namespace levcool
