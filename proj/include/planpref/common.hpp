#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace planpref {

// Error taxonomy. The CLI maps these onto exit codes: usage problems exit 1,
// bad input data exits 2, numerical divergence exits 3.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally malformed input (wrong column count, non-numeric cell, ...).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t line)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
    explicit ParseError(const std::string& msg) : std::runtime_error(msg), line_(0) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Well-formed input that violates a domain rule (range, unknown country, ...).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A computation cannot proceed on the given data (empty join, zero rows, ...).
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Training produced non-finite values.
class DivergenceError : public std::runtime_error {
public:
    explicit DivergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-fatal diagnostics are collected into a caller-supplied sink.
// A null sink discards them.
using WarningSink = std::vector<std::string>;

inline void warn(WarningSink* sink, const std::string& msg) {
    if (sink != nullptr) sink->push_back(msg);
}

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// Shortest round-trip formatting for doubles, used by every artifact writer so
// that re-reading a file reproduces the exact bit pattern.
inline std::string fmt_double(double v) {
    // Integers below 2^53 print exactly in plain notation, which reads better
    // than the "1e+02" the %g scan below would pick for them.
    if (std::isfinite(v) && v == std::floor(v) && std::fabs(v) < 9007199254740992.0) {
        char ibuf[32];
        std::snprintf(ibuf, sizeof(ibuf), "%.0f", v);
        return ibuf;
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    double back = 0.0;
    for (int prec = 1; prec <= 16; ++prec) {
        char probe[40];
        std::snprintf(probe, sizeof(probe), "%.*g", prec, v);
        std::sscanf(probe, "%lf", &back);
        if (back == v) return probe;
    }
    return buf;
}

inline std::string fmt_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

// FNV-1a 64-bit, used for artifact content hashes in the run manifest.
inline std::uint64_t fnv1a64(const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t fnv1a64(const std::string& s) { return fnv1a64(s.data(), s.size()); }

inline std::string hex64(std::uint64_t h) {
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace planpref
