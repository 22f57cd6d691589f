#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace frolov {

// Shortest decimal form with the requested number of significant digits.
// Used for every numeric value the library or CLI emits, so repeated runs
// are byte-identical and 17-digit output round-trips through strtod.
inline std::string format_real(double x, int digits = 17) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, digits);
    return std::string(buf, res.ptr);
}

} // namespace frolov
