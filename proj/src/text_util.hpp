#pragma once

#include <cstdio>
#include <string>

namespace rooflens::detail {

inline std::string fmt_g(double v, int sig) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", sig, v);
    return buf;
}

// Round-trip precision for structured outputs.
inline std::string fmt_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace rooflens::detail
