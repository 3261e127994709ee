#pragma once

#include <string>
#include <vector>

namespace structsums::csv {

/// Shortest decimal representation that round-trips the double exactly
/// (std::to_chars). Locale-free, '.' separator.
std::string format_double(double v);

/// One field: quotes are added only when the value contains ',', '"' or '\n'.
std::string escape_field(const std::string& s);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string to_string(const Table& t);
void write_file(const std::string& path, const Table& t);

/// Parse CSV text (quoted fields supported). First row is the header.
Table read_string(const std::string& text);
Table read_file(const std::string& path);

/// Parse a field as double; throws std::invalid_argument on junk.
double parse_double(const std::string& field);

} // namespace structsums::csv
