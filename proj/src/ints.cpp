#include "senav/ints.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <limits>

namespace senav {

std::string to_string(BigCount v) {
    if (v == 0) return "0";
    std::string out;
    while (v > 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::string to_string(SumValue v) {
    if (v >= 0) return to_string(static_cast<BigCount>(v));
    // -v is representable as unsigned even for the minimum value.
    return "-" + to_string(static_cast<BigCount>(0) - static_cast<BigCount>(v));
}

long long parse_i64(const std::string& text, int line, int column) {
    if (text.empty()) throw ParseError("empty integer token", line, column);
    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size()) throw ParseError("sign without digits", line, column);
    unsigned long long magnitude = 0;
    const unsigned long long limit =
        negative ? 9223372036854775808ULL : 9223372036854775807ULL;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("invalid digit '" + std::string(1, text[i]) + "'", line,
                             column + static_cast<int>(i));
        unsigned long long digit = static_cast<unsigned long long>(text[i] - '0');
        if (magnitude > (limit - digit) / 10)
            throw ParseError("integer out of 64-bit range: " + text, line, column);
        magnitude = magnitude * 10 + digit;
    }
    if (negative) return static_cast<long long>(-static_cast<unsigned long long>(magnitude));
    return static_cast<long long>(magnitude);
}

}  // namespace senav
