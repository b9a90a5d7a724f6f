#pragma once

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "simlab/errors.hpp"

namespace simlab {

/// Monetary amounts are integer cents throughout; doubles appear only at the
/// edges (display, probability math).
using Cents = std::int64_t;

inline double cents_to_dollars(Cents c) { return static_cast<double>(c) / 100.0; }

inline Cents dollars_to_cents(double d) {
    return static_cast<Cents>(d >= 0 ? d * 100.0 + 0.5 : d * 100.0 - 0.5);
}

/// "3.50", "-0.25"; no currency symbol.
inline std::string format_dollars(Cents c) {
    const char* sign = c < 0 ? "-" : "";
    const Cents a = c < 0 ? -c : c;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%s%lld.%02lld", sign,
                  static_cast<long long>(a / 100), static_cast<long long>(a % 100));
    return buf;
}

inline Cents parse_cents(const std::string& text) {
    char* end = nullptr;
    const long long v = std::strtoll(text.c_str(), &end, 10);
    if (end == text.c_str() || (end && *end != '\0'))
        throw DomainError("not an integer cent amount: '" + text + "'");
    return static_cast<Cents>(v);
}

} // namespace simlab
