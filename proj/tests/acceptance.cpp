// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails or exceeds its time budget.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "circprime/circprime.hpp"
#include "oracles.hpp"

using namespace circprime;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void expect(bool condition, const std::string& message)
    {
        if (!condition && ok) {
            ok = false;
            detail = message;
        }
    }
};

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;
    std::function<Outcome()> body;
};

std::string str(u64 v) { return std::to_string(v); }

// 1. n | k^n - k for every prime n < 100 and k in [2, 50].
Outcome fermat_sweep()
{
    Outcome o;
    u64 cases = 0;
    for (u64 n = 2; n < 100; ++n) {
        if (!is_prime(n))
            continue;
        for (u64 k = 2; k <= 50; ++k) {
            ++cases;
            o.expect(mod_pow(k, n, n) == k % n, "modular route fails at k=" + str(k) + " n=" + str(n));
            o.expect((natural_pow(k, n) - k) % n == 0, "exact route fails at k=" + str(k) + " n=" + str(n));
        }
    }
    o.detail = o.ok ? str(cases) + " cases" : o.detail;
    return o;
}

// 2. pi_mod(k, n, n) == 0 for k in [2, 12], n in [1, 16].
Outcome gauss_congruence()
{
    Outcome o;
    for (u64 k = 2; k <= 12; ++k)
        for (u64 n = 1; n <= 16; ++n)
            o.expect(pi_mod(k, n, n) == 0, "k=" + str(k) + " n=" + str(n));
    if (o.ok)
        o.detail = "176 cases";
    return o;
}

// 3. Enumeration per-divisor counts equal the Moebius counts and sum to k^n - 1.
Outcome oracle_equivalence()
{
    Outcome o;
    constexpr u64 bound = u64{1} << 20;
    u64 lattices = 0;
    u64 points = 0;
    auto check = [&](u64 k, u64 n) {
        const auto lattice = make_lattice(k, n);
        std::map<u64, u64> by_period;
        for (const auto& orbit : enumerate_orbits(lattice))
            by_period[orbit.period] += orbit.members.size();
        Natural sum = 0;
        for (u64 d : divisors(n)) {
            const Natural expected = count_exact_period(k, d);
            sum += expected;
            const auto it = by_period.find(d);
            const u64 got = it == by_period.end() ? 0 : it->second;
            o.expect(expected == got, "k=" + str(k) + " n=" + str(n) + " d=" + str(d));
            if (it != by_period.end())
                by_period.erase(it);
        }
        o.expect(by_period.empty(), "period not dividing n at k=" + str(k) + " n=" + str(n));
        o.expect(sum == lattice.modulus(), "sum mismatch at k=" + str(k) + " n=" + str(n));
        ++lattices;
        points += lattice.modulus().convert_to<u64>();
    };
    // every n >= 2 with k^n - 1 <= 2^20
    for (u64 n = 2; n <= 20; ++n)
        for (u64 k = 2; natural_pow(k, n) - 1 <= bound; ++k)
            check(k, n);
    // n = 1 lattices are k - 1 fixed points each
    for (u64 k = 2; k <= 4096; ++k)
        check(k, 1);
    if (o.ok)
        o.detail = str(lattices) + " lattices, " + str(points) + " points";
    return o;
}

// 4. Smallest base-2 pseudoprime is 341 = 11*31; first Carmichael number is 561 = 3*11*17.
Outcome reference_constants()
{
    Outcome o;
    const auto psp = enumerate_pseudoprimes(2, 1000);
    o.expect(!psp.empty() && psp.front() == 341, "smallest base-2 pseudoprime is not 341");
    o.expect(factorize(341) == Factorization({{11, 1}, {31, 1}}), "341 does not factor as 11*31");
    u64 first_carmichael = 0;
    for (u64 n = 2; n < 100'000 && first_carmichael == 0; ++n)
        if (is_carmichael(n))
            first_carmichael = n;
    o.expect(first_carmichael == 561, "first Carmichael number is " + str(first_carmichael));
    o.expect(factorize(561) == Factorization({{3, 1}, {11, 1}, {17, 1}}), "561 does not factor as 3*11*17");
    u64 first_carmichael_psp = 0;
    for (u64 n : psp)
        if (is_carmichael(n)) {
            first_carmichael_psp = n;
            break;
        }
    o.expect(first_carmichael_psp == 561, "first Carmichael among base-2 pseudoprimes is not 561");
    if (o.ok)
        o.detail = "341 = 11*31, 561 = 3*11*17";
    return o;
}

// 5. enumerate_pseudoprimes(2, 5000) equals the frozen golden list and a naive sweep.
Outcome golden_list()
{
    Outcome o;
    const std::vector<u64> expected{341, 561, 645, 1105, 1387, 1729, 1905, 2047,
                                    2465, 2701, 2821, 3277, 4033, 4369, 4371, 4681};
    std::ifstream in(CIRCPRIME_GOLDEN_DIR "/base2_pseudoprimes_to_5000.txt");
    std::vector<u64> golden;
    for (u64 v; in >> v;)
        golden.push_back(v);
    std::vector<u64> naive;
    for (u64 n = 2; n <= 5000; ++n)
        if (oracle::pseudoprime_naive(2, n))
            naive.push_back(n);
    o.expect(golden == expected, "golden file differs from the frozen list");
    o.expect(naive == expected, "naive sweep differs from the frozen list");
    o.expect(enumerate_pseudoprimes(2, 5000) == expected, "enumerate_pseudoprimes differs from the frozen list");
    if (o.ok)
        o.detail = "16 values";
    return o;
}

// 6. check_T1 holds for every base-2 and base-3 pseudoprime <= 10^4.
Outcome orbit_route_t1()
{
    Outcome o;
    u64 cases = 0;
    for (u64 k : {2u, 3u})
        for (u64 n : enumerate_pseudoprimes(k, 10'000)) {
            ++cases;
            o.expect(check_T1(k, n).verdict == Verdict::holds, "k=" + str(k) + " n=" + str(n));
        }
    o.expect(cases > 0, "no pseudoprimes found");
    if (o.ok)
        o.detail = str(cases) + " pseudoprimes";
    return o;
}

// 7. The two sides of the semiprime biconditional agree everywhere.
Outcome semiprime_t2()
{
    Outcome o;
    u64 cases = 0, both_true = 0;
    for (u64 n = 6; n <= 10'000; ++n) {
        const auto f = factorize(n);
        if (!f.squarefree() || f.distinct_primes() != 2)
            continue;
        const auto p = f.primes();
        for (u64 k = 2; k <= 20; ++k) {
            if (gcd(k, n) != 1)
                continue;
            const auto r = check_T2(k, p[0], p[1]);
            ++cases;
            both_true += r.param("pseudoprime") == 1;
            o.expect(r.verdict == Verdict::holds, "k=" + str(k) + " n=" + str(n));
        }
    }
    if (o.ok)
        o.detail = str(cases) + " cases, " + str(both_true) + " pseudoprime";
    return o;
}

// 8. Korselt agrees with pseudoprimality to every coprime base for composite n <= 10^4.
Outcome korselt()
{
    Outcome o;
    u64 carmichaels = 0;
    for (u64 n = 4; n <= 10'000; ++n) {
        if (is_prime(n))
            continue;
        bool all_bases = n % 2 == 1;
        for (u64 k = 2; k < n && all_bases; ++k)
            if (gcd(k, n) == 1 && !is_pseudoprime(k, n))
                all_bases = false;
        const bool korselt = is_carmichael(n);
        carmichaels += korselt;
        o.expect(korselt == all_bases, "n=" + str(n));
    }
    if (o.ok)
        o.detail = str(carmichaels) + " Carmichael numbers";
    return o;
}

// 9. Full identity suite over k in [2, 10], n <= 10^4.
Outcome identity_suite()
{
    Outcome o;
    SuiteConfig cfg;
    cfg.base_min = 2;
    cfg.base_max = 10;
    cfg.max_n = 10'000;
    cfg.rs_min = -3;
    cfg.rs_max = 3;
    cfg.qp_max = 3;
    cfg.mj_max = 3;
    cfg.claims = {ClaimId::R24_27,  ClaimId::GA28_32, ClaimId::GB33_35, ClaimId::EC36_38, ClaimId::GC39_42,
                  ClaimId::GE43,    ClaimId::TP44_47, ClaimId::TP48_58, ClaimId::TP59_61};
    const SuiteReport report = run_suite(cfg);
    o.expect(report.total_failures() == 0, "failures: " + str(report.total_failures()));
    for (ClaimId id : cfg.claims)
        o.expect(report.tally(id).holds > 0, std::string(claim_name(id)) + " never exercised");
    if (!o.ok && !report.failures.empty()) {
        std::ostringstream os;
        write_record(os, report.failures.front(), OutputFormat::plain);
        o.detail += "; first: " + os.str();
    }
    if (o.ok) {
        u64 holds = 0, degenerate = 0;
        for (ClaimId id : cfg.claims) {
            holds += report.tally(id).holds;
            degenerate += report.tally(id).degenerate;
        }
        o.detail = str(holds) + " holds, " + str(degenerate) + " degenerate, 0 failures";
    }
    return o;
}

// 10. Hand-checkable spot values.
Outcome spot_values()
{
    Outcome o;
    o.expect(natural_pow(2, 20) - 1 == Natural(341) * 3075, "2^20 - 1 != 341 * 3075");
    o.expect(natural_pow(2, 16) - 1 == Natural(17) * 3855, "2^16 - 1 != 17 * 3855");
    o.expect(count_exact_period(2, 6) == 54, "Pi_6(2) != 54");
    o.expect(orbit_count(2, 6) == 9, "orbit count != 9");
    if (o.ok)
        o.detail = "2^20-1 = 341*3075, 2^16-1 = 17*3855, Pi_6(2) = 54, 9 orbits";
    return o;
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "Fermat sweep: n | k^n - k, primes n < 100, k in [2,50]", 1.0, fermat_sweep},
        {2, "Gauss congruence: pi_mod(k,n,n) = 0, k in [2,12], n in [1,16]", 1.0, gauss_congruence},
        {3, "Oracle equivalence: enumeration vs Moebius counts, k^n - 1 <= 2^20", 120.0, oracle_equivalence},
        {4, "Reference constants: 341 = 11*31, 561 = 3*11*17", 1.0, reference_constants},
        {5, "Golden list: base-2 pseudoprimes <= 5000", 5.0, golden_list},
        {6, "check_T1 on base-2 and base-3 pseudoprimes <= 10^4", 5.0, orbit_route_t1},
        {7, "check_T2 biconditional over semiprimes <= 10^4, k in [2,20]", 60.0, semiprime_t2},
        {8, "Korselt <=> all coprime bases, composite n <= 10^4", 120.0, korselt},
        {9, "Full identity suite, k in [2,10], n <= 10^4", 300.0, identity_suite},
        {10, "Hand-checkable spot values", 1.0, spot_values},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.body();
        } catch (const std::exception& e) {
            outcome.ok = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool pass = outcome.ok;
        if (seconds > c.budget_seconds) {
            pass = false;
            outcome.detail += " (over budget of " + std::to_string(c.budget_seconds) + " s)";
        }
        std::printf("[%s] %2d %s: %s (%.3f s)\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(), outcome.detail.c_str(),
                    seconds);
        std::fflush(stdout);
        failed += !pass;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
