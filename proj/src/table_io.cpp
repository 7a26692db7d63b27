#include "demat/table_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include "demat/errors.hpp"

namespace demat::io {
namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::vector<std::string> split(const std::string& line, char delimiter) {
    std::vector<std::string> fields;
    std::string::size_type start = 0;
    while (true) {
        const auto pos = line.find(delimiter, start);
        if (pos == std::string::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, pos - start)));
        start = pos + 1;
    }
    return fields;
}

}  // namespace

char detect_delimiter(const std::string& header_line) {
    const auto count = [&](char c) {
        return std::count(header_line.begin(), header_line.end(), c);
    };
    const auto tabs = count('\t');
    const auto semis = count(';');
    const auto commas = count(',');
    if (tabs >= semis && tabs >= commas && tabs > 0) return '\t';
    if (semis >= commas && semis > 0) return ';';
    return ',';
}

Table read_delimited(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError(path, 0, "cannot open file");
    }
    Table table;
    table.path = path;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        if (table.header.empty()) {
            table.delimiter = detect_delimiter(line);
            table.header_line = line_no;
            for (auto& cell : split(line, table.delimiter)) {
                table.header.push_back(to_lower(cell));
            }
        } else {
            table.rows.push_back(split(line, table.delimiter));
            table.row_lines.push_back(line_no);
        }
    }
    if (table.header.empty()) {
        throw ParseError(path, 0, "file has no header row");
    }
    return table;
}

bool comma_decimal_allowed(char delimiter) noexcept {
    return delimiter == ';' || delimiter == '\t';
}

double parse_number(const std::string& field, char delimiter, const std::string& path, int line) {
    std::string text = trim(field);
    if (text.empty()) {
        throw ParseError(path, line, "empty numeric field");
    }
    if (comma_decimal_allowed(delimiter)) {
        std::replace(text.begin(), text.end(), ',', '.');
    }
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto result = std::from_chars(begin, end, value);
    if (result.ec != std::errc() || result.ptr != end || !std::isfinite(value)) {
        throw ParseError(path, line, "cannot parse number '" + field + "'");
    }
    return value;
}

long parse_integer(const std::string& field, const std::string& path, int line) {
    const std::string text = trim(field);
    long value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto result = std::from_chars(begin, end, value);
    if (text.empty() || result.ec != std::errc() || result.ptr != end) {
        throw ParseError(path, line, "cannot parse integer '" + field + "'");
    }
    return value;
}

std::string format_double(double value) {
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

void write_text_atomic(const std::filesystem::path& path, const std::string& content) {
    const auto parent = path.parent_path();
    if (!parent.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(parent, ec);
        if (ec) {
            throw IoError("cannot create directory '" + parent.string() + "': " + ec.message());
        }
    }
    const auto tmp = std::filesystem::path(path.string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot open '" + tmp.string() + "' for writing");
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) {
            throw IoError("failed writing '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw IoError("cannot move '" + tmp.string() + "' to '" + path.string() +
                      "': " + ec.message());
    }
}

TimeSeries load_time_series(const std::string& path, SeriesKind kind, const std::string& label) {
    const Table table = read_delimited(path);
    if (table.header.size() != 2 || table.header[0] != "year" || table.header[1] != "value") {
        throw ParseError(path, table.header_line, "expected header 'year,value'");
    }
    TimeSeries series;
    series.kind = kind;
    series.label = label.empty() ? std::filesystem::path(path).stem().string() : label;
    series.observations.reserve(table.rows.size());
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto& row = table.rows[i];
        const int line = table.row_lines[i];
        if (row.size() != 2) {
            throw ParseError(path, line, "expected 2 fields, got " + std::to_string(row.size()));
        }
        series.observations.push_back({parse_number(row[0], table.delimiter, path, line),
                                       parse_number(row[1], table.delimiter, path, line)});
    }
    series.validate();
    return series;
}

}  // namespace demat::io
