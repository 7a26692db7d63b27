#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "demat/estimate.hpp"

namespace demat::io {

/// A delimited text file split into trimmed cells. Header cells are lowercased;
/// data cells are kept verbatim apart from surrounding whitespace.
struct Table {
    std::string path;
    char delimiter = ',';
    int header_line = 0;                          ///< 1-based line of the header row
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<int> row_lines;                   ///< 1-based line per data row
};

/// Picks the delimiter among tab, semicolon and comma by occurrence count in
/// the header line (ties favour tab, then semicolon).
char detect_delimiter(const std::string& header_line);

Table read_delimited(const std::string& path);

/// Comma decimal separators are only unambiguous when the field delimiter is
/// a semicolon or a tab.
bool comma_decimal_allowed(char delimiter) noexcept;

double parse_number(const std::string& field, char delimiter, const std::string& path, int line);
long parse_integer(const std::string& field, const std::string& path, int line);

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double value);

/// Writes content to a sibling temporary file and renames it into place, so a
/// failed run never leaves a partial output behind. Creates parent directories.
void write_text_atomic(const std::filesystem::path& path, const std::string& content);

/// Reads a two-column series file with header `year,value`. The label defaults
/// to the file stem when empty.
TimeSeries load_time_series(const std::string& path, SeriesKind kind, const std::string& label = "");

}  // namespace demat::io
