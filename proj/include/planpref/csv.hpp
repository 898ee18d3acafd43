#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "planpref/common.hpp"

namespace planpref::csv {

struct Row {
    std::vector<std::string> fields;
    std::size_t line = 0;  // 1-based line in the source file
};

// Splits one CSV line. Double quotes guard embedded commas; "" inside a
// quoted field is a literal quote.
inline std::vector<std::string> split_line(const std::string& line, std::size_t line_no) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    if (quoted) throw ParseError("unterminated quote", line_no);
    out.push_back(cur);
    return out;
}

inline std::vector<Row> read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path);
    std::vector<Row> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1 && line.size() >= 3 && static_cast<unsigned char>(line[0]) == 0xEF &&
            static_cast<unsigned char>(line[1]) == 0xBB && static_cast<unsigned char>(line[2]) == 0xBF) {
            line.erase(0, 3);
        }
        if (line.empty() || line == "\r") continue;
        rows.push_back({split_line(line, line_no), line_no});
    }
    return rows;
}

inline std::vector<Row> read_text(const std::string& text) {
    std::vector<Row> rows;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        rows.push_back({split_line(line, line_no), line_no});
    }
    return rows;
}

inline std::string escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

inline std::string join_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += escape(fields[i]);
    }
    out += '\n';
    return out;
}

inline double parse_double(const std::string& field, std::size_t line_no, const std::string& what) {
    const std::string t = trim(field);
    if (t.empty()) throw ParseError("empty " + what + " value", line_no);
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(t, &pos);
    } catch (const std::exception&) {
        throw ParseError("non-numeric " + what + " value '" + t + "'", line_no);
    }
    if (pos != t.size()) throw ParseError("non-numeric " + what + " value '" + t + "'", line_no);
    return v;
}

inline long parse_long(const std::string& field, std::size_t line_no, const std::string& what) {
    const std::string t = trim(field);
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(t, &pos);
    } catch (const std::exception&) {
        throw ParseError("non-integer " + what + " value '" + t + "'", line_no);
    }
    if (pos != t.size()) throw ParseError("non-integer " + what + " value '" + t + "'", line_no);
    return v;
}

}  // namespace planpref::csv
