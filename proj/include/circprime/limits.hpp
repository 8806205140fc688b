#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

#include "circprime/errors.hpp"

namespace circprime {

/// Resource budgets for the exact (non-modular) operations.
struct Limits {
    /// Maximum lattice size accepted by enumerate_orbits.
    std::uint64_t enumeration_cap = std::uint64_t{1} << 26;
    /// Maximum bit length of k^n for exact big-integer counts.
    std::uint64_t max_bits = std::uint64_t{1} << 16;

    static constexpr const char* enumeration_cap_env = "CIRCPRIME_ENUM_CAP";
    static constexpr const char* max_bits_env = "CIRCPRIME_MAX_BITS";

    /// Defaults, overridden by CIRCPRIME_ENUM_CAP / CIRCPRIME_MAX_BITS when set.
    static Limits from_environment()
    {
        Limits limits;
        limits.enumeration_cap = read_env(enumeration_cap_env, limits.enumeration_cap);
        limits.max_bits = read_env(max_bits_env, limits.max_bits);
        return limits;
    }

private:
    static std::uint64_t read_env(const char* name, std::uint64_t fallback)
    {
        const char* raw = std::getenv(name);
        if (raw == nullptr || *raw == '\0')
            return fallback;
        char* end = nullptr;
        const unsigned long long v = std::strtoull(raw, &end, 10);
        if (*end != '\0' || v == 0)
            throw DomainError(std::string(name) + " must be a positive integer, got '" + raw + "'");
        return v;
    }
};

} // namespace circprime
