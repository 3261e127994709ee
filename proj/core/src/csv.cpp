#include "structsums/csv.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace structsums::csv {

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) throw std::runtime_error("format_double failed");
    return std::string(buf, ptr);
}

std::string escape_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string to_string(const Table& t) {
    std::ostringstream os;
    auto emit_row = [&os](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            os << escape_field(row[i]);
        }
        os << '\n';
    };
    emit_row(t.header);
    for (const auto& r : t.rows) emit_row(r);
    return os.str();
}

void write_file(const std::string& path, const Table& t) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << to_string(t);
    if (!f) throw std::runtime_error("write failed: " + path);
}

Table read_string(const std::string& text) {
    Table t;
    std::vector<std::string> row;
    std::string field;
    bool in_quotes = false;
    bool row_has_data = false;
    auto end_field = [&] {
        row.push_back(std::move(field));
        field.clear();
    };
    auto end_row = [&] {
        end_field();
        if (t.header.empty())
            t.header = std::move(row);
        else
            t.rows.push_back(std::move(row));
        row.clear();
        row_has_data = false;
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                field += c;
            }
            continue;
        }
        switch (c) {
        case '"': in_quotes = true; row_has_data = true; break;
        case ',': end_field(); row_has_data = true; break;
        case '\r': break;
        case '\n':
            if (row_has_data || !field.empty() || !row.empty()) end_row();
            break;
        default: field += c; row_has_data = true; break;
        }
    }
    if (row_has_data || !field.empty() || !row.empty()) end_row();
    return t;
}

Table read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open: " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return read_string(os.str());
}

double parse_double(const std::string& field) {
    double v = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last)
        throw std::invalid_argument("not a number: '" + field + "'");
    return v;
}

} // namespace structsums::csv
