#pragma once

// circprime command-line front end. run_cli() is kept separate from main()
// so the tests can drive it in-process.
//
// Exit codes: 0 success, 1 a claim failed, 2 usage or resource error.

#include <cstdint>
#include <iostream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif
#include <nlohmann/json.hpp>

#include "circprime/circprime.hpp"

namespace circprime::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_claim_failure = 1;
inline constexpr int exit_usage = 2;

namespace detail {

using nlohmann::ordered_json;

inline void write_fixed_points(std::ostream& out, u64 k, OutputFormat format)
{
    const auto points = fixed_points(k);
    if (format == OutputFormat::csv)
        out << "j,numerator,denominator\n";
    for (const auto& p : points) {
        switch (format) {
        case OutputFormat::plain:
            out << p.to_string() << " * 2pi\n";
            break;
        case OutputFormat::json:
            out << ordered_json{{"j", p.numerator}, {"numerator", p.numerator}, {"denominator", p.denominator}}.dump()
                << '\n';
            break;
        case OutputFormat::csv:
            out << p.numerator << ',' << p.numerator << ',' << p.denominator << '\n';
            break;
        }
    }
}

inline void write_spectrum(std::ostream& out, const PeriodSpectrum& spectrum, OutputFormat format)
{
    const Natural total = spectrum.total_points();
    const Natural expected = natural_pow(spectrum.k, spectrum.n) - 1;
    switch (format) {
    case OutputFormat::plain:
        out << "d pi_d orbits_d\n";
        for (const auto& e : spectrum.entries)
            out << e.divisor << ' ' << e.points << ' ' << e.orbits << '\n';
        out << "total " << total << (total == expected ? " == " : " != ") << "k^n - 1 = " << expected << '\n';
        break;
    case OutputFormat::json:
        // Big counts are emitted as decimal strings.
        for (const auto& e : spectrum.entries)
            out << ordered_json{{"type", "row"}, {"d", e.divisor}, {"pi_d", e.points.str()}, {"orbits_d", e.orbits.str()}}
                       .dump()
                << '\n';
        out << ordered_json{{"type", "total"},
                            {"k", spectrum.k},
                            {"n", spectrum.n},
                            {"total", total.str()},
                            {"expected", expected.str()},
                            {"ok", total == expected}}
                   .dump()
            << '\n';
        break;
    case OutputFormat::csv:
        out << "d,pi_d,orbits_d\n";
        for (const auto& e : spectrum.entries)
            out << e.divisor << ',' << e.points << ',' << e.orbits << '\n';
        out << "total," << total << ',' << expected << '\n';
        break;
    }
}

inline void write_orbits(std::ostream& out, const std::vector<OrbitSummary>& orbits, u64 k, u64 n,
                         OutputFormat format)
{
    if (format == OutputFormat::csv)
        out << "representative,period,members\n";
    for (const auto& o : orbits) {
        std::string members;
        for (u64 m : o.members) {
            if (!members.empty())
                members += ' ';
            members += std::to_string(m);
        }
        switch (format) {
        case OutputFormat::plain:
            out << "rep " << o.representative << " period " << o.period << ": " << members << '\n';
            break;
        case OutputFormat::json:
            out << ordered_json{{"k", k},
                                {"n", n},
                                {"representative", o.representative},
                                {"period", o.period},
                                {"members", o.members}}
                       .dump()
                << '\n';
            break;
        case OutputFormat::csv:
            out << o.representative << ',' << o.period << ',' << members << '\n';
            break;
        }
    }
}

inline ordered_json record_json(const PseudoprimeRecord& r)
{
    ordered_json factors = ordered_json::array();
    for (const auto& f : r.factorization.factors())
        factors.push_back({f.prime, f.exponent});
    return {{"n", r.n}, {"base", r.base}, {"factorization", factors}, {"carmichael", r.carmichael}};
}

inline void write_pseudoprime(std::ostream& out, const PseudoprimeRecord& r, OutputFormat format)
{
    switch (format) {
    case OutputFormat::plain:
        out << r.n << " = " << r.factorization.to_string() << " base " << r.base
            << (r.carmichael ? " carmichael" : "") << '\n';
        break;
    case OutputFormat::json:
        out << record_json(r).dump() << '\n';
        break;
    case OutputFormat::csv:
        out << r.n << ',' << r.base << ',' << r.factorization.to_string() << ',' << (r.carmichael ? 1 : 0) << '\n';
        break;
    }
}

inline OutputFormat to_format(const std::string& name)
{
    // Validated by CLI11's IsMember check.
    return *parse_output_format(name);
}

} // namespace detail

/// Parses argv and runs one subcommand, writing results to `out` and
/// diagnostics to `err`.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"circprime: circle-map periodic orbits, Fermat pseudoprimes and their divisibility identities"};
    app.require_subcommand(1);

    std::string format_name = "plain";
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"plain", "json", "csv"}));
    };
    auto positive = CLI::Range(std::uint64_t{1}, UINT64_MAX);
    auto at_least_two = CLI::Range(std::uint64_t{2}, UINT64_MAX);

    u64 k = 2;
    u64 n = 1;

    auto* fixed = app.add_subcommand("fixed-points", "List the k-1 fixed points as fractions of 2pi");
    fixed->add_option("--k", k, "Multiplier k >= 2")->required()->check(at_least_two);
    add_format(fixed);

    auto* spectrum = app.add_subcommand("spectrum", "Exact-period point and orbit counts for every d | n");
    spectrum->add_option("--k", k, "Multiplier k >= 2")->required()->check(at_least_two);
    spectrum->add_option("--n", n, "Period n >= 1")->required()->check(positive);
    add_format(spectrum);

    u64 modulus = 0;
    auto* count = app.add_subcommand("count", "Number of points of exact period n (optionally reduced mod m)");
    count->add_option("--k", k, "Multiplier k >= 2")->required()->check(at_least_two);
    count->add_option("--n", n, "Period n >= 1")->required()->check(positive);
    count->add_option("--mod", modulus, "Reduce the count modulo m")->check(positive);
    add_format(count);

    auto* orbits = app.add_subcommand("orbits", "Enumerate every cycle of the period-n lattice");
    orbits->add_option("--k", k, "Multiplier k >= 2")->required()->check(at_least_two);
    orbits->add_option("--n", n, "Period n >= 1")->required()->check(positive);
    add_format(orbits);

    u64 limit = 2;
    bool carmichael_only = false;
    bool allow_even = false;
    unsigned threads = 1;
    auto* psp = app.add_subcommand("pseudoprimes", "Fermat pseudoprimes to a base, ascending");
    psp->add_option("--base", k, "Base k >= 2")->check(at_least_two);
    psp->add_option("--limit", limit, "Largest n to test")->required()->check(at_least_two);
    psp->add_flag("--carmichael", carmichael_only, "Only Carmichael numbers");
    psp->add_flag("--allow-even", allow_even, "Admit even composites");
    psp->add_option("--threads", threads, "Worker threads (0 = hardware)");
    add_format(psp);

    SuiteConfig suite;
    std::optional<u64> base_max;
    std::vector<std::string> claim_names;
    auto* verify = app.add_subcommand("verify", "Sweep the divisibility identities and report failures");
    verify->add_option("--base", suite.base_min, "Smallest base")->check(at_least_two);
    verify->add_option("--base-max", base_max, "Largest base (defaults to --base)")->check(at_least_two);
    verify->add_option("--max-n", suite.max_n, "Largest n");
    verify->add_option("--rs-min", suite.rs_min, "Smallest r, s");
    verify->add_option("--rs-max", suite.rs_max, "Largest r, s");
    verify->add_option("--qp-max", suite.qp_max, "Largest q, p")->check(CLI::Range(std::int64_t{1}, INT64_MAX));
    verify->add_option("--mj-max", suite.mj_max, "Largest m, j")->check(CLI::Range(std::int64_t{1}, INT64_MAX));
    verify->add_option("--claims", claim_names, "Claim ids to run (default: all)")->delimiter(',');
    verify->add_option("--threads", suite.threads, "Worker threads (0 = hardware)");
    verify->add_flag("--records", suite.keep_records, "Emit every record, not only failures");
    add_format(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    const OutputFormat format = detail::to_format(format_name);
    try {
        const Limits limits = Limits::from_environment();
        if (fixed->parsed()) {
            detail::write_fixed_points(out, k, format);
        } else if (spectrum->parsed()) {
            detail::write_spectrum(out, period_spectrum(k, n, limits), format);
        } else if (count->parsed()) {
            const std::string value = modulus != 0 ? std::to_string(pi_mod(k, n, modulus))
                                                   : count_exact_period(k, n, limits).str();
            switch (format) {
            case OutputFormat::plain:
                out << "pi_n " << value << (modulus != 0 ? " mod " + std::to_string(modulus) : std::string()) << '\n';
                break;
            case OutputFormat::json:
                out << nlohmann::ordered_json{{"k", k}, {"n", n}, {"modulus", modulus}, {"pi_n", value}}.dump() << '\n';
                break;
            case OutputFormat::csv:
                out << "k,n,modulus,pi_n\n" << k << ',' << n << ',' << modulus << ',' << value << '\n';
                break;
            }
        } else if (orbits->parsed()) {
            const auto lattice = make_lattice(k, n, limits);
            detail::write_orbits(out, enumerate_orbits(lattice, limits), k, n, format);
        } else if (psp->parsed()) {
            if (format == OutputFormat::csv)
                out << "n,base,factorization,carmichael\n";
            for (u64 hit : enumerate_pseudoprimes(k, limit, {allow_even}, threads)) {
                const auto record = make_pseudoprime_record(k, hit);
                if (carmichael_only && !record.carmichael)
                    continue;
                detail::write_pseudoprime(out, record, format);
            }
        } else if (verify->parsed()) {
            suite.base_max = base_max.value_or(suite.base_min);
            for (const auto& name : claim_names) {
                const auto id = parse_claim_id(name);
                if (!id) {
                    err << "unknown claim id: " << name << '\n';
                    return exit_usage;
                }
                suite.claims.push_back(*id);
            }
            if (suite.rs_min > suite.rs_max) {
                err << "--rs-min must not exceed --rs-max\n";
                return exit_usage;
            }
            const SuiteReport report = run_suite(suite);
            write_report(out, report, format);
            return report.total_failures() == 0 ? exit_ok : exit_claim_failure;
        }
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << '\n';
        return exit_usage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_ok;
}

} // namespace circprime::cli
