#pragma once

// Executable divisibility identities for Fermat pseudoprimes built from two
// and three distinct primes, plus the sweep driver that checks them over
// parameter ranges.
//
// "q divides X" is always evaluated as a residue X mod q computed with
// mod_pow; no power of k is ever materialized.

#include <algorithm>
#include <array>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "circprime/arith.hpp"
#include "circprime/circle_map.hpp"
#include "circprime/errors.hpp"
#include "circprime/parallel.hpp"
#include "circprime/pseudoprime.hpp"

namespace circprime {

using i64 = std::int64_t;
using i128 = __int128;

enum class ClaimId {
    T1,
    T2,
    R24_27,
    GA28_32,
    GB33_35,
    EC36_38,
    GC39_42,
    GE43,
    TP44_47,
    TP48_58,
    TP59_61,
};

inline constexpr std::size_t claim_count = 11;

struct ClaimInfo {
    ClaimId id;
    std::string_view name;
    std::string_view description;
    std::string_view formula;
};

inline constexpr std::array<ClaimInfo, claim_count> claim_table{{
    {ClaimId::T1, "T1", "pseudoprime n divides k^n - k minus its exact-period point count",
     "n | k^n - k - Pi_n"},
    {ClaimId::T2, "T2", "semiprime n1*n2 is a pseudoprime iff each prime divides k^(other) - k",
     "n | k^n - k  <=>  n1 | k^n2 - k and n2 | k^n1 - k"},
    {ClaimId::R24_27, "R24_27", "semiprime pseudoprime: both k^ni - k and the difference power are divisible",
     "n | k^n1 - k; n | k^n2 - k; n, n1, n2 | k^|n1-n2| - 1"},
    {ClaimId::GA28_32, "GA28_32", "prime-power exponents telescoped against the other factor",
     "n1 | k^(n1^r) - k; n1 | k^|n1^r - n2| - 1; n2 | k^|n2^r - n1| - 1"},
    {ClaimId::GB33_35, "GB33_35", "multiples of ni - 1 as exponents", "n | k^(r(ni-1)) - 1, i = 1,2"},
    {ClaimId::EC36_38, "EC36_38", "sum exponent n1 + n2 - 2 and the Euler totient route",
     "n | k^(n1+n2-2) - 1; n | k^phi(n) - 1, phi(n) = n1n2 - n1 - n2 + 1"},
    {ClaimId::GC39_42, "GC39_42", "integer combinations r(n1-1) + s(n2-1) as exponents",
     "n | k^(r n1 + s n2 - (r+s)) - 1, exponent > 0"},
    {ClaimId::GE43, "GE43", "integer combinations of prime powers as exponents",
     "n | k^(r n1^q + s n2^p - (r+s)) - 1, exponent > 0"},
    {ClaimId::TP44_47, "TP44_47", "three-prime pseudoprime: pairwise and single-prime orbit counts sum to a multiple of n",
     "n, n1, n2, n3 | k^n1n2 + k^n1n3 + k^n2n3 - k^n1 - k^n2 - k^n3"},
    {ClaimId::TP48_58, "TP48_58", "three-prime pseudoprime: each prime divides k^|product of others - itself| - 1",
     "n1 | k^|n2n3 - n1| - 1 and rotations"},
    {ClaimId::TP59_61, "TP59_61", "three-prime pseudoprime: prime powers and multiples of the rotated exponents",
     "n1 | k^(j |n2n3 - n1^m|) - 1 and rotations"},
}};

inline constexpr const ClaimInfo& claim_info(ClaimId id) { return claim_table[static_cast<std::size_t>(id)]; }

inline constexpr std::string_view claim_name(ClaimId id) { return claim_info(id).name; }

inline std::optional<ClaimId> parse_claim_id(std::string_view name)
{
    for (const auto& info : claim_table)
        if (info.name == name)
            return info.id;
    return std::nullopt;
}

enum class Verdict { holds, fails, degenerate, not_applicable };

inline constexpr std::string_view verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::degenerate: return "degenerate";
    case Verdict::not_applicable: return "not_applicable";
    }
    return "?";
}

struct Param {
    std::string name;
    i64 value = 0;

    friend bool operator==(const Param&, const Param&) = default;
};

/// A divisibility that did not hold: `residue` is the numerator reduced
/// modulo the would-be divisor `modulus`.
struct Witness {
    std::string condition;
    u64 residue = 0;
    u64 modulus = 0;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct ClaimResult {
    ClaimId claim = ClaimId::T1;
    std::vector<Param> params;
    Verdict verdict = Verdict::holds;
    std::optional<Witness> witness;

    std::optional<i64> param(std::string_view name) const
    {
        for (const auto& p : params)
            if (p.name == name)
                return p.value;
        return std::nullopt;
    }

    friend bool operator==(const ClaimResult&, const ClaimResult&) = default;
};

namespace detail {

inline u64 checked_mul(u64 a, u64 b)
{
    const u128 product = static_cast<u128>(a) * b;
    if (product > UINT64_MAX)
        throw DomainError("claim parameter product overflows 64 bits");
    return static_cast<u64>(product);
}

inline i128 checked_ipow(u64 base, u64 exponent)
{
    constexpr i128 ceiling = static_cast<i128>(1) << 100;
    i128 result = 1;
    for (u64 i = 0; i < exponent; ++i) {
        result *= base;
        if (result > ceiling)
            throw DomainError("claim exponent " + std::to_string(base) + "^" + std::to_string(exponent)
                              + " is out of range");
    }
    return result;
}

inline u64 to_exponent(i128 e)
{
    if (e < 0)
        e = -e;
    if (e > static_cast<i128>(UINT64_MAX))
        throw DomainError("claim exponent does not fit in 64 bits");
    return static_cast<u64>(e);
}

inline u64 abs_diff(i128 a, i128 b) { return to_exponent(a - b); }

// (k^e - 1) mod m
inline u64 pow_minus_one(u64 k, u64 e, u64 m)
{
    return static_cast<u64>((static_cast<u128>(mod_pow(k, e, m)) + m - 1 % m) % m);
}

// (k^e - k) mod m
inline u64 pow_minus_base(u64 k, u64 e, u64 m)
{
    return static_cast<u64>((static_cast<u128>(mod_pow(k, e, m)) + m - k % m) % m);
}

// Accumulates the divisibilities of one claim instance into a verdict.
class Evaluation {
public:
    Evaluation(ClaimId id, std::vector<Param> params) : result_{id, std::move(params), Verdict::holds, std::nullopt} {}

    void require_zero(std::string condition, u64 residue, u64 modulus)
    {
        if (residue == 0 || result_.verdict != Verdict::holds)
            return;
        result_.verdict = Verdict::fails;
        result_.witness = Witness{std::move(condition), residue, modulus};
    }

    void add_param(std::string name, i64 value) { result_.params.push_back({std::move(name), value}); }

    ClaimResult finish() && { return std::move(result_); }

    ClaimResult degenerate() &&
    {
        result_.verdict = Verdict::degenerate;
        result_.witness.reset();
        return std::move(result_);
    }

    ClaimResult not_applicable() &&
    {
        result_.verdict = Verdict::not_applicable;
        return std::move(result_);
    }

private:
    ClaimResult result_;
};

inline bool distinct_primes(std::initializer_list<u64> primes)
{
    std::vector<u64> v(primes);
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
        return false;
    return std::all_of(v.begin(), v.end(), [](u64 p) { return is_prime(p); });
}

inline i64 as_param(u64 v) { return static_cast<i64>(v); }

// n1*n2 (or n1*n2*n3) when the factors are distinct primes, else nullopt.
inline std::optional<u64> distinct_prime_product(std::initializer_list<u64> primes)
{
    if (!distinct_primes(primes))
        return std::nullopt;
    u64 n = 1;
    for (u64 p : primes)
        n = checked_mul(n, p);
    return n;
}

} // namespace detail

/// n | k^n - k - Pi_n for a base-k pseudoprime n.
inline ClaimResult check_T1(u64 k, u64 n)
{
    detail::Evaluation eval(ClaimId::T1, {{"k", detail::as_param(k)}, {"n", detail::as_param(n)}});
    if (k < 2 || !is_pseudoprime(k, n))
        return std::move(eval).not_applicable();
    const u64 fermat = detail::pow_minus_base(k, n, n);
    const u64 pi = pi_mod(k, n, n);
    const u64 residue = static_cast<u64>((static_cast<u128>(fermat) + n - pi) % n);
    eval.require_zero("n | k^n - k - Pi_n", residue, n);
    return std::move(eval).finish();
}

/// The biconditional itself: holds iff both sides agree. The left side is
/// "n | k^n - k" for the coprime composite n = n1*n2.
inline ClaimResult check_T2(u64 k, u64 n1, u64 n2)
{
    const auto product = detail::distinct_prime_product({n1, n2});
    if (!product)
        throw PreconditionError("check_T2: n1 and n2 must be distinct primes");
    const u64 n = *product;
    if (k < 2 || gcd(k, n) != 1)
        throw PreconditionError("check_T2: gcd(k, n1*n2) must be 1 with k >= 2");

    const u64 fermat = detail::pow_minus_base(k, n, n);
    const u64 first = detail::pow_minus_base(k, n2, n1);
    const u64 second = detail::pow_minus_base(k, n1, n2);
    const bool pseudoprime = fermat == 0;
    const bool conditions = first == 0 && second == 0;

    detail::Evaluation eval(ClaimId::T2, {{"k", detail::as_param(k)},
                                          {"n1", detail::as_param(n1)},
                                          {"n2", detail::as_param(n2)},
                                          {"n", detail::as_param(n)},
                                          {"pseudoprime", pseudoprime},
                                          {"conditions", conditions}});
    if (pseudoprime && !conditions) {
        if (first != 0)
            eval.require_zero("n | k^n - k but n1 does not divide k^n2 - k", first, n1);
        else
            eval.require_zero("n | k^n - k but n2 does not divide k^n1 - k", second, n2);
    } else if (!pseudoprime && conditions) {
        eval.require_zero("factor conditions hold but n does not divide k^n - k", fermat, n);
    }
    return std::move(eval).finish();
}

namespace detail {

inline std::vector<Param> pair_params(u64 k, u64 n1, u64 n2)
{
    return {{"k", as_param(k)}, {"n1", as_param(n1)}, {"n2", as_param(n2)}};
}

// n = n1*n2 with distinct primes and n a base-k pseudoprime.
inline std::optional<u64> semiprime_pseudoprime(u64 k, u64 n1, u64 n2)
{
    const auto n = distinct_prime_product({n1, n2});
    if (!n || k < 2 || !is_pseudoprime(k, *n))
        return std::nullopt;
    return n;
}

inline std::optional<u64> triprime_pseudoprime(u64 k, u64 n1, u64 n2, u64 n3)
{
    const auto n = distinct_prime_product({n1, n2, n3});
    if (!n || k < 2 || !is_pseudoprime(k, *n))
        return std::nullopt;
    return n;
}

} // namespace detail

inline ClaimResult check_R24_27(u64 k, u64 n1, u64 n2)
{
    detail::Evaluation eval(ClaimId::R24_27, detail::pair_params(k, n1, n2));
    const auto n = detail::semiprime_pseudoprime(k, n1, n2);
    if (!n)
        return std::move(eval).not_applicable();
    const u64 diff = std::max(n1, n2) - std::min(n1, n2);
    eval.require_zero("n | k^n1 - k", detail::pow_minus_base(k, n1, *n), *n);
    eval.require_zero("n | k^n2 - k", detail::pow_minus_base(k, n2, *n), *n);
    eval.require_zero("n | k^|n1-n2| - 1", detail::pow_minus_one(k, diff, *n), *n);
    eval.require_zero("n1 | k^|n1-n2| - 1", detail::pow_minus_one(k, diff, n1), n1);
    eval.require_zero("n2 | k^|n1-n2| - 1", detail::pow_minus_one(k, diff, n2), n2);
    return std::move(eval).finish();
}

inline ClaimResult check_GA28_32(u64 k, u64 n1, u64 n2, i64 r)
{
    if (r < 1)
        throw DomainError("check_GA28_32: r must be >= 1");
    auto params = detail::pair_params(k, n1, n2);
    params.push_back({"r", r});
    detail::Evaluation eval(ClaimId::GA28_32, std::move(params));
    if (!detail::semiprime_pseudoprime(k, n1, n2))
        return std::move(eval).not_applicable();

    const i128 n1_pow = detail::checked_ipow(n1, static_cast<u64>(r));
    const i128 n2_pow = detail::checked_ipow(n2, static_cast<u64>(r));
    const u64 e1 = detail::abs_diff(n1_pow, n2);
    const u64 e2 = detail::abs_diff(n2_pow, n1);
    if (e1 == 0 || e2 == 0)
        return std::move(eval).degenerate();
    eval.require_zero("n1 | k^(n1^r) - k", detail::pow_minus_base(k, detail::to_exponent(n1_pow), n1), n1);
    eval.require_zero("n1 | k^|n1^r - n2| - 1", detail::pow_minus_one(k, e1, n1), n1);
    eval.require_zero("n2 | k^|n2^r - n1| - 1", detail::pow_minus_one(k, e2, n2), n2);
    return std::move(eval).finish();
}

inline ClaimResult check_GB33_35(u64 k, u64 n1, u64 n2, i64 r)
{
    if (r < 1)
        throw DomainError("check_GB33_35: r must be >= 1");
    auto params = detail::pair_params(k, n1, n2);
    params.push_back({"r", r});
    detail::Evaluation eval(ClaimId::GB33_35, std::move(params));
    const auto n = detail::semiprime_pseudoprime(k, n1, n2);
    if (!n)
        return std::move(eval).not_applicable();
    const u64 ru = static_cast<u64>(r);
    eval.require_zero("n | k^(r(n1-1)) - 1", detail::pow_minus_one(k, detail::checked_mul(ru, n1 - 1), *n), *n);
    eval.require_zero("n | k^(r(n2-1)) - 1", detail::pow_minus_one(k, detail::checked_mul(ru, n2 - 1), *n), *n);
    return std::move(eval).finish();
}

inline ClaimResult check_EC36_38(u64 k, u64 n1, u64 n2)
{
    detail::Evaluation eval(ClaimId::EC36_38, detail::pair_params(k, n1, n2));
    const auto n = detail::semiprime_pseudoprime(k, n1, n2);
    if (!n)
        return std::move(eval).not_applicable();
    const u64 phi = *n - n1 - n2 + 1;
    if (phi != totient(*n))
        throw InvariantError("totient product rule disagrees with factorization for n = " + std::to_string(*n));
    eval.add_param("phi", detail::as_param(phi));
    eval.require_zero("n | k^(n1+n2-2) - 1", detail::pow_minus_one(k, n1 + n2 - 2, *n), *n);
    eval.require_zero("n | k^phi(n) - 1", detail::pow_minus_one(k, phi, *n), *n);
    return std::move(eval).finish();
}

/// r and s may be negative; exponents <= 0 are degenerate.
inline ClaimResult check_GC39_42(u64 k, u64 n1, u64 n2, i64 r, i64 s)
{
    auto params = detail::pair_params(k, n1, n2);
    params.push_back({"r", r});
    params.push_back({"s", s});
    detail::Evaluation eval(ClaimId::GC39_42, std::move(params));
    const auto n = detail::semiprime_pseudoprime(k, n1, n2);
    if (!n)
        return std::move(eval).not_applicable();
    const i128 e = static_cast<i128>(r) * n1 + static_cast<i128>(s) * n2 - (static_cast<i128>(r) + s);
    if (e <= 0)
        return std::move(eval).degenerate();
    eval.require_zero("n | k^(r n1 + s n2 - (r+s)) - 1", detail::pow_minus_one(k, detail::to_exponent(e), *n), *n);
    return std::move(eval).finish();
}

inline ClaimResult check_GE43(u64 k, u64 n1, u64 n2, i64 r, i64 s, i64 q, i64 p)
{
    if (q < 1 || p < 1)
        throw DomainError("check_GE43: q and p must be >= 1");
    auto params = detail::pair_params(k, n1, n2);
    params.push_back({"r", r});
    params.push_back({"s", s});
    params.push_back({"q", q});
    params.push_back({"p", p});
    detail::Evaluation eval(ClaimId::GE43, std::move(params));
    const auto n = detail::semiprime_pseudoprime(k, n1, n2);
    if (!n)
        return std::move(eval).not_applicable();
    const i128 e = static_cast<i128>(r) * detail::checked_ipow(n1, static_cast<u64>(q))
                   + static_cast<i128>(s) * detail::checked_ipow(n2, static_cast<u64>(p))
                   - (static_cast<i128>(r) + s);
    if (e <= 0)
        return std::move(eval).degenerate();
    eval.require_zero("n | k^(r n1^q + s n2^p - (r+s)) - 1", detail::pow_minus_one(k, detail::to_exponent(e), *n),
                      *n);
    return std::move(eval).finish();
}

namespace detail {

inline std::vector<Param> triple_params(u64 k, u64 n1, u64 n2, u64 n3)
{
    return {{"k", as_param(k)}, {"n1", as_param(n1)}, {"n2", as_param(n2)}, {"n3", as_param(n3)}};
}

// (k^n1n2 + k^n1n3 + k^n2n3 - k^n1 - k^n2 - k^n3) mod m
inline u64 pair_minus_single_sum(u64 k, u64 n1, u64 n2, u64 n3, u64 m)
{
    u128 acc = 0;
    for (u64 e : {checked_mul(n1, n2), checked_mul(n1, n3), checked_mul(n2, n3)})
        acc += mod_pow(k, e, m);
    for (u64 e : {n1, n2, n3})
        acc += m - mod_pow(k, e, m);
    return static_cast<u64>(acc % m);
}

} // namespace detail

inline ClaimResult check_TP44_47(u64 k, u64 n1, u64 n2, u64 n3)
{
    detail::Evaluation eval(ClaimId::TP44_47, detail::triple_params(k, n1, n2, n3));
    const auto n = detail::triprime_pseudoprime(k, n1, n2, n3);
    if (!n)
        return std::move(eval).not_applicable();

    // Orbit-count route: sum of exact-period counts for the proper divisors > 1.
    u128 pis = 0;
    for (u64 d : {detail::checked_mul(n1, n2), detail::checked_mul(n1, n3), detail::checked_mul(n2, n3), n1, n2, n3})
        pis += pi_mod(k, d, *n);
    eval.require_zero("n | sum of Pi_d over d in {n1n2, n1n3, n2n3, n1, n2, n3}", static_cast<u64>(pis % *n), *n);

    const char* label = "| k^n1n2 + k^n1n3 + k^n2n3 - k^n1 - k^n2 - k^n3";
    eval.require_zero(std::string("n ") + label, detail::pair_minus_single_sum(k, n1, n2, n3, *n), *n);
    eval.require_zero(std::string("n1 ") + label, detail::pair_minus_single_sum(k, n1, n2, n3, n1), n1);
    eval.require_zero(std::string("n2 ") + label, detail::pair_minus_single_sum(k, n1, n2, n3, n2), n2);
    eval.require_zero(std::string("n3 ") + label, detail::pair_minus_single_sum(k, n1, n2, n3, n3), n3);
    return std::move(eval).finish();
}

namespace detail {

// Shared body of the three-prime rotation claims: for each prime ni with the
// other two a, b: ni | k^(j * |a*b - ni^m|) - 1.
inline ClaimResult rotated_exponents(ClaimId id, u64 k, u64 n1, u64 n2, u64 n3, i64 m, i64 j,
                                     std::vector<Param> params)
{
    Evaluation eval(id, std::move(params));
    if (!triprime_pseudoprime(k, n1, n2, n3))
        return std::move(eval).not_applicable();
    struct Rotation {
        u64 prime, a, b;
        const char* label;
    };
    const std::array<Rotation, 3> rotations{{
        {n1, n2, n3, "n1 | k^(j |n2n3 - n1^m|) - 1"},
        {n2, n1, n3, "n2 | k^(j |n1n3 - n2^m|) - 1"},
        {n3, n1, n2, "n3 | k^(j |n1n2 - n3^m|) - 1"},
    }};
    std::array<u64, 3> exponents{};
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& rot = rotations[i];
        const u64 base = abs_diff(static_cast<i128>(checked_mul(rot.a, rot.b)), checked_ipow(rot.prime, static_cast<u64>(m)));
        exponents[i] = checked_mul(base, static_cast<u64>(j));
        if (exponents[i] == 0)
            return std::move(eval).degenerate();
    }
    for (std::size_t i = 0; i < 3; ++i)
        eval.require_zero(rotations[i].label, pow_minus_one(k, exponents[i], rotations[i].prime), rotations[i].prime);
    return std::move(eval).finish();
}

} // namespace detail

/// Absolute values are applied uniformly, so no ordering of the primes is assumed.
inline ClaimResult check_TP48_58(u64 k, u64 n1, u64 n2, u64 n3)
{
    return detail::rotated_exponents(ClaimId::TP48_58, k, n1, n2, n3, 1, 1, detail::triple_params(k, n1, n2, n3));
}

inline ClaimResult check_TP59_61(u64 k, u64 n1, u64 n2, u64 n3, i64 m, i64 j)
{
    if (m < 1 || j < 1)
        throw DomainError("check_TP59_61: m and j must be >= 1");
    auto params = detail::triple_params(k, n1, n2, n3);
    params.push_back({"m", m});
    params.push_back({"j", j});
    return detail::rotated_exponents(ClaimId::TP59_61, k, n1, n2, n3, m, j, std::move(params));
}

// ---------------------------------------------------------------------------
// Sweeps

struct SuiteConfig {
    u64 base_min = 2;
    u64 base_max = 2;
    u64 max_n = 10'000;
    i64 rs_min = -3;
    i64 rs_max = 3;
    i64 qp_max = 3;
    i64 mj_max = 3;
    /// Empty selects every claim.
    std::vector<ClaimId> claims;
    unsigned threads = 1;
    /// Keep every ClaimResult, not only failures.
    bool keep_records = false;

    bool selected(ClaimId id) const
    {
        return claims.empty() || std::find(claims.begin(), claims.end(), id) != claims.end();
    }
};

struct ClaimTally {
    u64 holds = 0;
    u64 fails = 0;
    u64 degenerate = 0;
    u64 not_applicable = 0;

    u64 total() const noexcept { return holds + fails + degenerate + not_applicable; }

    void add(Verdict v) noexcept
    {
        switch (v) {
        case Verdict::holds: ++holds; break;
        case Verdict::fails: ++fails; break;
        case Verdict::degenerate: ++degenerate; break;
        case Verdict::not_applicable: ++not_applicable; break;
        }
    }

    ClaimTally& operator+=(const ClaimTally& o) noexcept
    {
        holds += o.holds;
        fails += o.fails;
        degenerate += o.degenerate;
        not_applicable += o.not_applicable;
        return *this;
    }

    friend bool operator==(const ClaimTally&, const ClaimTally&) = default;
};

struct SuiteReport {
    SuiteConfig config;
    std::array<ClaimTally, claim_count> tallies{};
    /// In sweep order: base, then n, then claim, then auxiliary parameters.
    std::vector<ClaimResult> failures;
    /// Populated only when config.keep_records is set.
    std::vector<ClaimResult> records;

    const ClaimTally& tally(ClaimId id) const { return tallies[static_cast<std::size_t>(id)]; }

    u64 total_failures() const
    {
        u64 total = 0;
        for (const auto& t : tallies)
            total += t.fails;
        return total;
    }

    bool empty() const
    {
        return std::all_of(tallies.begin(), tallies.end(), [](const ClaimTally& t) { return t.total() == 0; });
    }
};

namespace detail {

class SuiteCollector {
public:
    SuiteCollector() = default;
    explicit SuiteCollector(bool keep) : keep_(keep) {}

    void add(ClaimResult result)
    {
        tallies_[static_cast<std::size_t>(result.claim)].add(result.verdict);
        if (result.verdict == Verdict::fails)
            failures_.push_back(result);
        if (keep_)
            records_.push_back(std::move(result));
    }

    void merge_into(SuiteReport& report) &&
    {
        for (std::size_t i = 0; i < claim_count; ++i)
            report.tallies[i] += tallies_[i];
        std::move(failures_.begin(), failures_.end(), std::back_inserter(report.failures));
        std::move(records_.begin(), records_.end(), std::back_inserter(report.records));
    }

private:
    bool keep_ = false;
    std::array<ClaimTally, claim_count> tallies_{};
    std::vector<ClaimResult> failures_;
    std::vector<ClaimResult> records_;
};

inline void run_semiprime_claims(const SuiteConfig& cfg, SuiteCollector& out, u64 k, u64 a, u64 b)
{
    if (cfg.selected(ClaimId::R24_27))
        out.add(check_R24_27(k, a, b));
    if (cfg.selected(ClaimId::GA28_32)) {
        for (i64 r = 1; r <= std::max<i64>(1, cfg.rs_max); ++r) {
            out.add(check_GA28_32(k, a, b, r));
            out.add(check_GA28_32(k, b, a, r));
        }
    }
    if (cfg.selected(ClaimId::GB33_35))
        for (i64 r = 1; r <= std::max<i64>(1, cfg.rs_max); ++r)
            out.add(check_GB33_35(k, a, b, r));
    if (cfg.selected(ClaimId::EC36_38))
        out.add(check_EC36_38(k, a, b));
    if (cfg.selected(ClaimId::GC39_42))
        for (i64 r = cfg.rs_min; r <= cfg.rs_max; ++r)
            for (i64 s = cfg.rs_min; s <= cfg.rs_max; ++s)
                out.add(check_GC39_42(k, a, b, r, s));
    if (cfg.selected(ClaimId::GE43))
        for (i64 r = cfg.rs_min; r <= cfg.rs_max; ++r)
            for (i64 s = cfg.rs_min; s <= cfg.rs_max; ++s)
                for (i64 q = 1; q <= cfg.qp_max; ++q)
                    for (i64 p = 1; p <= cfg.qp_max; ++p)
                        out.add(check_GE43(k, a, b, r, s, q, p));
}

inline void run_triprime_claims(const SuiteConfig& cfg, SuiteCollector& out, u64 k, u64 a, u64 b, u64 c)
{
    if (cfg.selected(ClaimId::TP44_47))
        out.add(check_TP44_47(k, a, b, c));
    if (cfg.selected(ClaimId::TP48_58))
        out.add(check_TP48_58(k, a, b, c));
    if (cfg.selected(ClaimId::TP59_61))
        for (i64 m = 1; m <= cfg.mj_max; ++m)
            for (i64 j = 1; j <= cfg.mj_max; ++j)
                out.add(check_TP59_61(k, a, b, c, m, j));
}

// Marks a whole family as not applicable to a pseudoprime of the wrong shape.
template <std::size_t N>
void skip_family(const SuiteConfig& cfg, SuiteCollector& out, u64 k, u64 n, const std::array<ClaimId, N>& family)
{
    for (ClaimId id : family)
        if (cfg.selected(id))
            out.add({id, {{"k", as_param(k)}, {"n", as_param(n)}}, Verdict::not_applicable, std::nullopt});
}

inline void run_candidate(const SuiteConfig& cfg, SuiteCollector& out, u64 k, u64 n)
{
    static constexpr std::array two_prime_family{ClaimId::R24_27,  ClaimId::GA28_32, ClaimId::GB33_35,
                                                 ClaimId::EC36_38, ClaimId::GC39_42, ClaimId::GE43};
    static constexpr std::array three_prime_family{ClaimId::TP44_47, ClaimId::TP48_58, ClaimId::TP59_61};
    const Factorization f = factorize(n);
    const auto primes = f.primes();
    const bool squarefree = f.squarefree();

    if (cfg.selected(ClaimId::T2) && squarefree && primes.size() == 2 && gcd(k, n) == 1)
        out.add(check_T2(k, primes[0], primes[1]));

    if (!is_pseudoprime(k, n))
        return;
    if (cfg.selected(ClaimId::T1))
        out.add(check_T1(k, n));

    if (squarefree && primes.size() == 2)
        run_semiprime_claims(cfg, out, k, primes[0], primes[1]);
    else
        skip_family(cfg, out, k, n, two_prime_family);

    if (squarefree && primes.size() == 3)
        run_triprime_claims(cfg, out, k, primes[0], primes[1], primes[2]);
    else
        skip_family(cfg, out, k, n, three_prime_family);
}

} // namespace detail

/// Runs every selected claim over k in [base_min, base_max] and n in [2, max_n].
/// Candidates for T1 and the two/three-prime families are the base-k
/// pseudoprimes; T2 runs on every coprime product of two distinct primes.
/// The report is identical for any thread count.
inline SuiteReport run_suite(const SuiteConfig& config)
{
    SuiteReport report;
    report.config = config;
    if (config.max_n < 2 || config.base_min < 2 || config.base_min > config.base_max)
        return report;

    const u64 per_base = config.max_n - 1; // n in [2, max_n]
    const u64 bases = config.base_max - config.base_min + 1;
    const std::size_t cells = static_cast<std::size_t>(detail::checked_mul(per_base, bases));

    auto parts = parallel_chunks(cells, config.threads, [&](std::size_t begin, std::size_t end) {
        detail::SuiteCollector out(config.keep_records);
        for (std::size_t cell = begin; cell < end; ++cell) {
            const u64 k = config.base_min + cell / per_base;
            const u64 n = 2 + cell % per_base;
            detail::run_candidate(config, out, k, n);
        }
        return out;
    });
    for (auto& part : parts)
        std::move(part).merge_into(report);
    return report;
}

} // namespace circprime
