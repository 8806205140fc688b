#pragma once

// Exact periodic structure of the circle map theta -> k*theta (mod 2*pi).
//
// A point of period dividing n sits at theta = 2*pi*j / (k^n - 1), so the
// lattice of such points is the integer range [0, k^n - 1) and the map acts
// as j -> k*j mod (k^n - 1). No floating point is involved anywhere.

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "circprime/arith.hpp"
#include "circprime/errors.hpp"
#include "circprime/limits.hpp"
#include "circprime/natural.hpp"

namespace circprime {

/// The angle 2*pi * numerator / denominator.
struct AngleFraction {
    u64 numerator = 0;
    u64 denominator = 1;

    std::string to_string() const { return std::to_string(numerator) + "/" + std::to_string(denominator); }
    friend bool operator==(const AngleFraction&, const AngleFraction&) = default;
};

namespace detail {

inline void require_multiplier(u64 k)
{
    if (k < 2)
        throw DomainError("circle map multiplier k must be >= 2, got " + std::to_string(k));
}

inline void require_period(u64 n)
{
    if (n < 1)
        throw DomainError("period n must be >= 1");
}

// Throws when k^n would exceed the big-integer budget.
inline void require_bit_budget(u64 k, u64 n, const Limits& limits)
{
    const auto width = static_cast<u128>(std::bit_width(k));
    if (static_cast<u128>(n) * (width - 1) > limits.max_bits)
        throw ResourceError("k^n = " + std::to_string(k) + "^" + std::to_string(n) + " exceeds the big-integer budget of "
                            + std::to_string(limits.max_bits) + " bits");
}

} // namespace detail

/// The k - 1 fixed points theta_j = 2*pi*j/(k-1), j = 0..k-2.
inline std::vector<AngleFraction> fixed_points(u64 k)
{
    detail::require_multiplier(k);
    std::vector<AngleFraction> out;
    out.reserve(k - 1);
    for (u64 j = 0; j + 1 < k; ++j)
        out.push_back({j, k - 1});
    return out;
}

class PeriodicLattice;

/// Index j of the point 2*pi*j/(k^n - 1) on a lattice. Holds a non-owning
/// pointer to its lattice, which must outlive it.
class LatticePoint {
public:
    const PeriodicLattice& lattice() const noexcept { return *lattice_; }
    const Natural& index() const noexcept { return index_; }

    friend bool operator==(const LatticePoint& a, const LatticePoint& b)
    {
        return a.lattice_ == b.lattice_ && a.index_ == b.index_;
    }

private:
    friend class PeriodicLattice;
    LatticePoint(const PeriodicLattice* lattice, Natural index) : lattice_(lattice), index_(std::move(index)) {}

    const PeriodicLattice* lattice_;
    Natural index_;
};

/// All points of period dividing n, indexed by j in [0, k^n - 1).
class PeriodicLattice {
public:
    PeriodicLattice(u64 k, u64 n, const Limits& limits = {}) : k_(k), n_(n)
    {
        detail::require_multiplier(k);
        detail::require_period(n);
        detail::require_bit_budget(k, n, limits);
        modulus_ = natural_pow(k, n) - 1;
        if (msb(modulus_) + 1 > limits.max_bits)
            throw ResourceError("k^n - 1 exceeds the big-integer budget of " + std::to_string(limits.max_bits) + " bits");
    }

    u64 k() const noexcept { return k_; }
    u64 n() const noexcept { return n_; }
    /// k^n - 1; also the number of lattice points.
    const Natural& modulus() const noexcept { return modulus_; }

    LatticePoint point(Natural index) const
    {
        if (index < 0 || index >= modulus_)
            throw DomainError("lattice index " + index.str() + " outside [0, " + modulus_.str() + ")");
        return LatticePoint(this, std::move(index));
    }

    /// Image of a point under theta -> k*theta.
    LatticePoint step(const LatticePoint& p) const
    {
        check_owner(p);
        return LatticePoint(this, (p.index() * k_) % modulus_);
    }

    /// Least d >= 1 with f^d(p) == p. Tests the divisors d of n in increasing
    /// order against (k^d - 1) * j == 0 (mod k^n - 1).
    u64 exact_period(const LatticePoint& p) const
    {
        check_owner(p);
        for (u64 d : divisors(n_)) {
            const Natural shift = natural_pow(k_, d) - 1;
            if ((shift * p.index()) % modulus_ == 0)
                return d;
        }
        throw InvariantError("no divisor of n fixes lattice point " + p.index().str());
    }

private:
    void check_owner(const LatticePoint& p) const
    {
        if (&p.lattice() != this)
            throw DomainError("lattice point belongs to a different lattice");
    }

    u64 k_;
    u64 n_;
    Natural modulus_;
};

inline PeriodicLattice make_lattice(u64 k, u64 n, const Limits& limits = {}) { return PeriodicLattice(k, n, limits); }

inline LatticePoint step(const LatticePoint& p) { return p.lattice().step(p); }

inline u64 exact_period(const LatticePoint& p) { return p.lattice().exact_period(p); }

/// One cycle of the map on a lattice.
struct OrbitSummary {
    u64 representative = 0;   ///< smallest member
    u64 period = 0;           ///< exact period, equals members.size()
    std::vector<u64> members; ///< in iteration order, starting at representative
};

/// Partitions the whole lattice into cycles, sorted by representative.
/// Lattices larger than limits.enumeration_cap are rejected.
inline std::vector<OrbitSummary> enumerate_orbits(const PeriodicLattice& lattice, const Limits& limits = {})
{
    if (lattice.modulus() > limits.enumeration_cap)
        throw ResourceError("lattice of " + lattice.modulus().str() + " points exceeds the enumeration cap of "
                            + std::to_string(limits.enumeration_cap) + " (set " + Limits::enumeration_cap_env
                            + " to override)");
    const u64 modulus = lattice.modulus().convert_to<u64>();
    const u64 k = lattice.k() % modulus;

    std::vector<OrbitSummary> orbits;
    std::vector<bool> visited(modulus, false);
    for (u64 start = 0; start < modulus; ++start) {
        if (visited[start])
            continue;
        OrbitSummary orbit;
        orbit.representative = start;
        u64 j = start;
        do {
            visited[j] = true;
            orbit.members.push_back(j);
            j = mul_mod(j, k, modulus);
        } while (j != start);
        orbit.period = orbit.members.size();
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

/// Number of lattice points of exact period n:
///   sum over d | n of moebius(n/d) * (k^d - 1).
inline Natural count_exact_period(u64 k, u64 n, const Limits& limits = {})
{
    detail::require_multiplier(k);
    detail::require_period(n);
    detail::require_bit_budget(k, n, limits);
    Natural total = 0;
    for (u64 d : divisors(n)) {
        const int mu = moebius(n / d);
        if (mu == 0)
            continue;
        const Natural term = natural_pow(k, d) - 1;
        if (mu > 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

/// Number of cycles of exact period n. Throws InvariantError if n does not
/// divide the exact-period count.
inline Natural orbit_count(u64 k, u64 n, const Limits& limits = {})
{
    const Natural points = count_exact_period(k, n, limits);
    if (points % n != 0)
        throw InvariantError("exact-period count " + points.str() + " not divisible by n = " + std::to_string(n));
    return points / n;
}

/// count_exact_period(k, n) mod m, computed term by term without big integers.
inline u64 pi_mod(u64 k, u64 n, u64 m)
{
    detail::require_multiplier(k);
    detail::require_period(n);
    if (m == 0)
        throw DomainError("pi_mod: modulus must be >= 1");
    u64 acc = 0;
    for (u64 d : divisors(n)) {
        const int mu = moebius(n / d);
        if (mu == 0)
            continue;
        // k^d - 1 reduced into [0, m)
        const u64 term = static_cast<u64>((static_cast<u128>(mod_pow(k, d, m)) + m - 1) % m);
        acc = mu > 0 ? static_cast<u64>((static_cast<u128>(acc) + term) % m)
                     : static_cast<u64>((static_cast<u128>(acc) + (m - term)) % m);
    }
    return acc;
}

struct SpectrumEntry {
    u64 divisor = 0;
    Natural points;  ///< exact-period-d point count
    Natural orbits;  ///< points / divisor
};

/// Per-divisor breakdown of the period-n lattice.
struct PeriodSpectrum {
    u64 k = 0;
    u64 n = 0;
    std::vector<SpectrumEntry> entries; ///< ascending by divisor

    Natural total_points() const
    {
        Natural sum = 0;
        for (const auto& e : entries)
            sum += e.points;
        return sum;
    }
};

inline PeriodSpectrum period_spectrum(u64 k, u64 n, const Limits& limits = {})
{
    detail::require_multiplier(k);
    detail::require_period(n);
    detail::require_bit_budget(k, n, limits);
    PeriodSpectrum spectrum{k, n, {}};
    for (u64 d : divisors(n)) {
        Natural points = count_exact_period(k, d, limits);
        if (points % d != 0)
            throw InvariantError("exact-period count not divisible by d = " + std::to_string(d));
        Natural orbits = points / d;
        spectrum.entries.push_back({d, std::move(points), std::move(orbits)});
    }
    if (spectrum.total_points() != natural_pow(k, n) - 1)
        throw InvariantError("period spectrum does not sum to k^n - 1");
    return spectrum;
}

} // namespace circprime
