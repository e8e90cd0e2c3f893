#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>
#include <variant>
#include <vector>

#include "zetalab/errors.hpp"

namespace zetalab {

/// Shortest faithful decimal for a double ("%.17g" round-trips exactly, and
/// identical bits always print identically, which the golden tests rely on).
inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

/// A rectangular result table; the single output currency of the CLI.
/// Comments render as '#'-prefixed lines and are excluded from golden
/// comparisons.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::string> comments;

    void add_row(std::vector<Cell> cells) { rows.push_back(std::move(cells)); }
};

inline std::string render_cell(const Cell& c) {
    if (std::holds_alternative<std::monostate>(c)) return "";
    if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
    if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
    return std::get<std::string>(c);
}

inline std::string render_csv(const Table& t) {
    std::string out;
    for (const std::string& c : t.comments) out += "# " + c + "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) out += ',';
        out += t.columns[i];
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += render_cell(row[i]);
        }
        out += '\n';
    }
    return out;
}

inline std::string render_json(const Table& t) {
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (const char ch : s) {
            if (ch == '"' || ch == '\\') q += '\\';
            q += ch;
        }
        return q + "\"";
    };
    std::string out = "{\n  \"rows\": [\n";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        out += "    {";
        for (std::size_t i = 0; i < t.rows[r].size(); ++i) {
            if (i) out += ", ";
            out += quote(t.columns[i]) + ": ";
            const Cell& c = t.rows[r][i];
            if (std::holds_alternative<std::monostate>(c))
                out += "null";
            else if (const auto* s = std::get_if<std::string>(&c))
                out += quote(*s);
            else
                out += render_cell(c);
        }
        out += r + 1 < t.rows.size() ? "},\n" : "}\n";
    }
    out += "  ]\n}\n";
    return out;
}

/// Writes atomically: temp file in the same directory, then rename.
inline void atomic_write_file(const std::string& path,
                              const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw error("cannot open " + tmp + " for writing");
        f.write(content.data(),
                static_cast<std::streamsize>(content.size()));
        if (!f) throw error("short write to " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw error("cannot rename " + tmp + " to " + path);
}

/// Schedule strings: "5000" | "5000,10000,20000" | "5000x2^12"
/// (geometric: 5000 * 2^j for j = 0..12).
inline std::vector<std::int64_t> parse_schedule(const std::string& text) {
    auto parse_int = [](const std::string& s) -> std::int64_t {
        if (s.empty()) throw precondition_error("schedule: empty number");
        std::size_t pos = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(s, &pos);
        } catch (...) {
            throw precondition_error("schedule: bad number '" + s + "'");
        }
        if (pos != s.size() || v < 1)
            throw precondition_error("schedule: bad number '" + s + "'");
        return v;
    };
    const std::size_t x = text.find('x');
    if (x != std::string::npos) {
        const std::size_t caret = text.find('^', x);
        if (caret == std::string::npos)
            throw precondition_error("schedule: expected BASExRATIO^COUNT in '" +
                                     text + "'");
        const std::int64_t base = parse_int(text.substr(0, x));
        const std::int64_t ratio = parse_int(text.substr(x + 1, caret - x - 1));
        const std::int64_t top = parse_int(text.substr(caret + 1));
        if (ratio < 2 || top > 40)
            throw precondition_error("schedule: ratio must be >= 2 and the "
                                     "exponent <= 40");
        std::vector<std::int64_t> out;
        std::int64_t v = base;
        for (std::int64_t j = 0; j <= top; ++j) {
            out.push_back(v);
            if (v > (std::int64_t{1} << 56)) break;
            v *= ratio;
        }
        return out;
    }
    std::vector<std::int64_t> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string piece =
            text.substr(start, comma == std::string::npos ? std::string::npos
                                                          : comma - start);
        out.push_back(parse_int(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.empty()) throw precondition_error("schedule: empty");
    return out;
}

/// "a,b" or "a,b,c,d" etc.; throws on count mismatch.
inline std::vector<double> parse_reals(const std::string& text,
                                       std::size_t expect) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string piece =
            text.substr(start, comma == std::string::npos ? std::string::npos
                                                          : comma - start);
        std::size_t pos = 0;
        double v = 0;
        try {
            v = std::stod(piece, &pos);
        } catch (...) {
            throw precondition_error("bad real '" + piece + "'");
        }
        if (pos != piece.size())
            throw precondition_error("bad real '" + piece + "'");
        out.push_back(v);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.size() != expect)
        throw precondition_error("expected " + std::to_string(expect) +
                                 " comma-separated reals in '" + text + "'");
    return out;
}

} // namespace zetalab
