#pragma once
//
// CSV serialization. Numbers use the shortest decimal form that round-trips to
// the same double (at most 17 significant digits); newline is LF; a header row
// is always written.
//

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "offcenter/angle.hpp"

namespace offcenter::csv {

inline std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view s) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw DomainError("not a number: '" + std::string(s) + "'");
    return v;
}

inline long long parse_int(std::string_view s) {
    long long v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw DomainError("not an integer: '" + std::string(s) + "'");
    return v;
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

inline void write_row(std::ostream& os, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) os << ',';
        os << fields[i];
    }
    os << '\n';
}

inline void write_table(std::ostream& os, const Table& t) {
    write_row(os, t.header);
    for (const auto& row : t.rows) write_row(os, row);
}

inline std::vector<std::string> split_line(std::string_view line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = line.find(',', start);
        out.emplace_back(line.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

/// Parses LF-separated rows; the first is the header. Field counts must match it.
inline Table read_table(std::istream& is) {
    Table t;
    std::string line;
    if (!std::getline(is, line)) throw DomainError("empty CSV input");
    t.header = split_line(line);
    while (std::getline(is, line)) {
        auto row = split_line(line);
        if (row.size() != t.header.size()) throw DomainError("CSV row has wrong field count: " + line);
        t.rows.push_back(std::move(row));
    }
    return t;
}

inline Table read_table(std::string_view text) {
    std::istringstream is{std::string(text)};
    return read_table(is);
}

inline std::string to_string(const Table& t) {
    std::ostringstream os;
    write_table(os, t);
    return os.str();
}

} // namespace offcenter::csv
