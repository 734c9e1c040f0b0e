// format.hpp — Deterministic shortest-round-trip decimal rendering.

#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace spinbath {

// Shortest decimal string that round-trips to the same double.
inline std::string format_real(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

} // namespace spinbath
