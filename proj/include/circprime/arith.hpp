#pragma once

// Exact 64-bit integer primitives: modular exponentiation, deterministic
// primality, factorization and the multiplicative functions built on it.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "circprime/errors.hpp"

namespace circprime {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline constexpr u64 mul_mod(u64 a, u64 b, u64 m)
{
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

/// base^exponent mod modulus by square-and-multiply. modulus == 1 yields 0.
inline constexpr u64 mod_pow(u64 base, u64 exponent, u64 modulus)
{
    if (modulus == 0)
        throw DomainError("mod_pow: modulus must be >= 1");
    u64 result = 1 % modulus;
    base %= modulus;
    while (exponent > 0) {
        if (exponent & 1u)
            result = mul_mod(result, base, modulus);
        exponent >>= 1;
        if (exponent > 0)
            base = mul_mod(base, base, modulus);
    }
    return result;
}

/// gcd(0, 0) == 0.
inline constexpr u64 gcd(u64 a, u64 b) { return std::gcd(a, b); }

namespace detail {

inline constexpr bool strong_probable_prime(u64 n, u64 witness, u64 odd_part, unsigned twos)
{
    witness %= n;
    if (witness == 0)
        return true;
    u64 x = mod_pow(witness, odd_part, n);
    if (x == 1 || x == n - 1)
        return true;
    for (unsigned i = 1; i < twos; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1)
            return true;
        if (x == 1)
            return false;
    }
    return false;
}

} // namespace detail

/// Deterministic for every 64-bit n: Miller-Rabin over the first twelve
/// prime witnesses, which has no strong pseudoprime below 3.1e24.
inline constexpr bool is_prime(u64 n)
{
    constexpr std::array<u64, 12> witnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (n < 2)
        return false;
    for (u64 p : witnesses) {
        if (n % p == 0)
            return n == p;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1u) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : witnesses) {
        if (!detail::strong_probable_prime(n, a, d, s))
            return false;
    }
    return true;
}

/// Primes below 10^6, sieved once on first use.
inline const std::vector<std::uint32_t>& trial_primes()
{
    static const std::vector<std::uint32_t> primes = [] {
        constexpr std::uint32_t limit = 1'000'000;
        std::vector<bool> composite(limit, false);
        std::vector<std::uint32_t> out;
        out.reserve(78'498);
        for (std::uint32_t i = 2; i < limit; ++i) {
            if (composite[i])
                continue;
            out.push_back(i);
            for (u64 j = static_cast<u64>(i) * i; j < limit; j += i)
                composite[j] = true;
        }
        return out;
    }();
    return primes;
}

struct PrimePower {
    u64 prime = 0;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with primes strictly increasing.
class Factorization {
public:
    Factorization() = default;
    explicit Factorization(std::vector<PrimePower> factors) : factors_(std::move(factors)) {}

    const std::vector<PrimePower>& factors() const noexcept { return factors_; }
    std::size_t distinct_primes() const noexcept { return factors_.size(); }

    bool squarefree() const noexcept
    {
        return std::all_of(factors_.begin(), factors_.end(),
                           [](const PrimePower& f) { return f.exponent == 1; });
    }

    /// Number of prime factors counted with multiplicity.
    unsigned omega_total() const noexcept
    {
        unsigned total = 0;
        for (const auto& f : factors_)
            total += f.exponent;
        return total;
    }

    u64 value() const noexcept
    {
        u64 v = 1;
        for (const auto& f : factors_)
            for (unsigned i = 0; i < f.exponent; ++i)
                v *= f.prime;
        return v;
    }

    std::vector<u64> primes() const
    {
        std::vector<u64> out;
        out.reserve(factors_.size());
        for (const auto& f : factors_)
            out.push_back(f.prime);
        return out;
    }

    /// "3*11*17", "2^3".
    std::string to_string() const
    {
        std::string out;
        for (const auto& f : factors_) {
            if (!out.empty())
                out += '*';
            out += std::to_string(f.prime);
            if (f.exponent > 1)
                out += '^' + std::to_string(f.exponent);
        }
        return out;
    }

    friend bool operator==(const Factorization&, const Factorization&) = default;

private:
    std::vector<PrimePower> factors_;
};

namespace detail {

// Brent's variant of Pollard rho; n must be odd and composite.
inline u64 pollard_brent(u64 n)
{
    for (u64 c = 1;; ++c) {
        auto f = [&](u64 x) { return (mul_mod(x, x, n) + c) % n; };
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        constexpr u64 batch = 128;
        for (u64 r = 1; g == 1; r <<= 1) {
            x = y;
            for (u64 i = 0; i < r; ++i)
                y = f(y);
            for (u64 k = 0; k < r && g == 1; k += batch) {
                ys = y;
                for (u64 i = 0; i < std::min(batch, r - k); ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
            }
        }
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

inline void split_cofactor(u64 n, std::vector<u64>& out)
{
    if (n == 1)
        return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_brent(n);
    split_cofactor(d, out);
    split_cofactor(n / d, out);
}

} // namespace detail

/// Complete factorization: trial division by primes below 10^6, then
/// Pollard-Brent on whatever composite cofactor remains.
inline Factorization factorize(u64 n)
{
    if (n < 2)
        throw DomainError("factorize: n must be >= 2, got " + std::to_string(n));
    std::vector<PrimePower> factors;
    for (std::uint32_t p : trial_primes()) {
        if (static_cast<u64>(p) * p > n)
            break;
        if (n % p != 0)
            continue;
        unsigned e = 0;
        do {
            n /= p;
            ++e;
        } while (n % p == 0);
        factors.push_back({p, e});
    }
    if (n > 1) {
        std::vector<u64> rest;
        detail::split_cofactor(n, rest);
        std::sort(rest.begin(), rest.end());
        for (u64 p : rest) {
            if (!factors.empty() && factors.back().prime == p)
                ++factors.back().exponent;
            else
                factors.push_back({p, 1});
        }
    }
    return Factorization(std::move(factors));
}

inline std::vector<u64> divisors(const Factorization& f)
{
    std::vector<u64> out{1};
    for (const auto& [p, e] : f.factors()) {
        const std::size_t existing = out.size();
        u64 power = 1;
        for (unsigned i = 0; i < e; ++i) {
            power *= p;
            for (std::size_t j = 0; j < existing; ++j)
                out.push_back(out[j] * power);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Sorted divisors; divisors(1) == {1}.
inline std::vector<u64> divisors(u64 n)
{
    if (n == 0)
        throw DomainError("divisors: n must be >= 1");
    if (n == 1)
        return {1};
    return divisors(factorize(n));
}

inline int moebius(const Factorization& f)
{
    if (!f.squarefree())
        return 0;
    return f.distinct_primes() % 2 == 0 ? 1 : -1;
}

inline int moebius(u64 n)
{
    if (n == 0)
        throw DomainError("moebius: n must be >= 1");
    return n == 1 ? 1 : moebius(factorize(n));
}

inline u64 totient(const Factorization& f)
{
    u64 phi = 1;
    for (const auto& [p, e] : f.factors()) {
        phi *= p - 1;
        for (unsigned i = 1; i < e; ++i)
            phi *= p;
    }
    return phi;
}

inline u64 totient(u64 n)
{
    if (n == 0)
        throw DomainError("totient: n must be >= 1");
    return n == 1 ? 1 : totient(factorize(n));
}

} // namespace circprime
