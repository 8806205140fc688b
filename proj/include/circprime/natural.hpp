#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "circprime/errors.hpp"

namespace circprime {

/// Arbitrary-precision non-negative integer for exact k^n-scale counts.
using Natural = boost::multiprecision::cpp_int;

inline std::string to_string(const Natural& value) { return value.str(); }

inline Natural parse_natural(std::string_view text)
{
    if (text.empty())
        throw DomainError("empty natural number literal");
    for (char c : text)
        if (c < '0' || c > '9')
            throw DomainError("invalid natural number literal: " + std::string(text));
    return Natural(std::string(text));
}

/// Exact k^n as a Natural.
inline Natural natural_pow(std::uint64_t base, std::uint64_t exponent)
{
    Natural result = 1;
    Natural b = base;
    while (exponent > 0) {
        if (exponent & 1u)
            result *= b;
        exponent >>= 1;
        if (exponent > 0)
            b *= b;
    }
    return result;
}

} // namespace circprime
