#pragma once

// Fermat pseudoprimes: odd composite n, coprime to the base k, with
// k^(n-1) == 1 (mod n). Carmichael numbers are detected with Korselt's
// criterion.

#include <cstdint>
#include <string>
#include <vector>

#include "circprime/arith.hpp"
#include "circprime/errors.hpp"
#include "circprime/parallel.hpp"

namespace circprime {

struct PseudoprimeOptions {
    /// Admit even n (e.g. 161038 for base 2). Off by default.
    bool allow_even = false;
};

struct PseudoprimeRecord {
    u64 n = 0;
    u64 base = 0;
    Factorization factorization;
    bool carmichael = false;

    friend bool operator==(const PseudoprimeRecord&, const PseudoprimeRecord&) = default;
};

/// k^(n-1) == 1 (mod n), no other filtering.
inline bool fermat_congruence_holds(u64 k, u64 n)
{
    if (n < 2)
        throw DomainError("fermat_congruence_holds: n must be >= 2");
    return mod_pow(k % n, n - 1, n) == 1;
}

inline bool is_pseudoprime(u64 k, u64 n, const PseudoprimeOptions& options = {})
{
    if (n < 4)
        return false;
    if (!options.allow_even && n % 2 == 0)
        return false;
    if (gcd(k % n, n) != 1)
        return false;
    if (!fermat_congruence_holds(k, n))
        return false;
    return !is_prime(n);
}

/// Korselt: composite, squarefree, and (p - 1) | (n - 1) for every p | n.
inline bool is_carmichael(const Factorization& f)
{
    if (f.omega_total() < 2 || !f.squarefree())
        return false;
    const u64 n = f.value();
    for (const auto& pp : f.factors())
        if ((n - 1) % (pp.prime - 1) != 0)
            return false;
    return true;
}

inline bool is_carmichael(u64 n)
{
    if (n < 4)
        return false;
    return is_carmichael(factorize(n));
}

/// All n <= limit with is_pseudoprime(k, n), ascending.
inline std::vector<u64> enumerate_pseudoprimes(u64 k, u64 limit, const PseudoprimeOptions& options = {},
                                               unsigned threads = 1)
{
    if (limit < 4)
        return {};
    const std::size_t count = limit - 3; // candidates 4..limit
    auto chunks = parallel_chunks(count, threads, [&](std::size_t begin, std::size_t end) {
        std::vector<u64> hits;
        for (std::size_t i = begin; i < end; ++i) {
            const u64 n = 4 + i;
            if (is_pseudoprime(k, n, options))
                hits.push_back(n);
        }
        return hits;
    });
    std::vector<u64> out;
    for (auto& c : chunks)
        out.insert(out.end(), c.begin(), c.end());
    return out;
}

inline PseudoprimeRecord make_pseudoprime_record(u64 k, u64 n)
{
    Factorization f = factorize(n);
    const bool carmichael = is_carmichael(f);
    return {n, k, std::move(f), carmichael};
}

/// k^phi(n) == 1 (mod n). Requires gcd(k, n) == 1.
inline bool euler_theorem_check(u64 k, u64 n)
{
    if (n == 0)
        throw DomainError("euler_theorem_check: n must be >= 1");
    if (gcd(k, n) != 1)
        throw PreconditionError("euler_theorem_check: gcd(" + std::to_string(k) + ", " + std::to_string(n)
                                + ") != 1");
    return mod_pow(k, totient(n), n) == 1 % n;
}

} // namespace circprime
