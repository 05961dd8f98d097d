#pragma once

// 128-bit arithmetic helpers shared by every module.
//
// Subset sums are accumulated in signed 128-bit checked arithmetic (element
// magnitudes are limited to 63 bits, so any realistic instance fits with
// headroom).  Enumeration indices ("preceding possibilities") and solution
// counts use unsigned 128-bit values; index bookkeeping needs one bit per
// element, so instances are capped at 126 non-zero elements up front instead
// of silently wrapping.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace senav {

using SumValue = __int128;
using BigCount = unsigned __int128;

struct OverflowError : std::runtime_error {
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

struct SizeError : std::runtime_error {
    explicit SizeError(const std::string& what) : std::runtime_error(what) {}
};

struct RangeError : std::runtime_error {
    explicit RangeError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, int line, int column)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line(line),
          column(column) {}
    int line;
    int column;
};

struct NoSolutionError : std::runtime_error {
    explicit NoSolutionError(const std::string& what) : std::runtime_error(what) {}
};

inline SumValue checked_add(SumValue a, SumValue b) {
    SumValue out;
    if (__builtin_add_overflow(a, b, &out)) throw OverflowError("sum exceeds 128-bit range");
    return out;
}

inline SumValue checked_sub(SumValue a, SumValue b) {
    SumValue out;
    if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("difference exceeds 128-bit range");
    return out;
}

inline SumValue checked_mul(SumValue a, SumValue b) {
    SumValue out;
    if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("product exceeds 128-bit range");
    return out;
}

// 2^k as an unsigned 128-bit count.
inline BigCount pow2(unsigned k) {
    if (k >= 128) throw OverflowError("2^" + std::to_string(k) + " exceeds 128-bit index range");
    return BigCount{1} << k;
}

std::string to_string(SumValue v);
std::string to_string(BigCount v);

// Parses a signed decimal integer that must fit in 64 bits.
long long parse_i64(const std::string& text, int line, int column);

}  // namespace senav
