#pragma once

// Rendering of claim results and suite reports.
//
//   plain  one human-readable line per record, then a tally table
//   json   one JSON object per line: {"type":"record",...} records followed
//          by a single {"type":"summary",...} object
//   csv    a record table with a header row, a blank line, then a summary
//          table with its own header row
//
// Record schema: claim_id, params (flattened key=value), verdict, witness.

#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "circprime/claims.hpp"

namespace circprime {

enum class OutputFormat { plain, json, csv };

inline std::optional<OutputFormat> parse_output_format(std::string_view name)
{
    if (name == "plain")
        return OutputFormat::plain;
    if (name == "json")
        return OutputFormat::json;
    if (name == "csv")
        return OutputFormat::csv;
    return std::nullopt;
}

inline std::string flatten_params(const std::vector<Param>& params, char separator = ' ')
{
    std::string out;
    for (const auto& p : params) {
        if (!out.empty())
            out += separator;
        out += p.name + '=' + std::to_string(p.value);
    }
    return out;
}

/// Double quotes a CSV field when it contains a separator or quote.
inline std::string csv_field(std::string_view text)
{
    if (text.find_first_of(",\"\n") == std::string_view::npos)
        return std::string(text);
    std::string out = "\"";
    for (char c : text) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

inline nlohmann::ordered_json to_json(const ClaimResult& r)
{
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& p : r.params)
        params[p.name] = p.value;
    nlohmann::ordered_json j;
    j["type"] = "record";
    j["claim_id"] = claim_name(r.claim);
    j["params"] = std::move(params);
    j["verdict"] = verdict_name(r.verdict);
    if (r.witness)
        j["witness"] = {{"condition", r.witness->condition},
                        {"residue", r.witness->residue},
                        {"modulus", r.witness->modulus}};
    else
        j["witness"] = nullptr;
    return j;
}

inline constexpr std::string_view record_csv_header = "claim_id,params,verdict,witness_condition,witness_residue,witness_modulus";
inline constexpr std::string_view summary_csv_header = "claim_id,holds,fails,degenerate,not_applicable";

inline void write_record(std::ostream& os, const ClaimResult& r, OutputFormat format)
{
    switch (format) {
    case OutputFormat::plain:
        os << claim_name(r.claim) << ' ' << flatten_params(r.params) << ' ' << verdict_name(r.verdict);
        if (r.witness)
            os << " witness: " << r.witness->condition << " residue " << r.witness->residue << " mod "
               << r.witness->modulus;
        os << '\n';
        break;
    case OutputFormat::json:
        os << to_json(r).dump() << '\n';
        break;
    case OutputFormat::csv:
        os << claim_name(r.claim) << ',' << csv_field(flatten_params(r.params, ';')) << ',' << verdict_name(r.verdict)
           << ',';
        if (r.witness)
            os << csv_field(r.witness->condition) << ',' << r.witness->residue << ',' << r.witness->modulus;
        else
            os << ",,";
        os << '\n';
        break;
    }
}

inline nlohmann::ordered_json summary_json(const SuiteReport& report)
{
    nlohmann::ordered_json claims = nlohmann::ordered_json::object();
    for (const auto& info : claim_table) {
        if (!report.config.selected(info.id))
            continue;
        const ClaimTally& t = report.tally(info.id);
        claims[std::string(info.name)] = {{"holds", t.holds},
                                          {"fails", t.fails},
                                          {"degenerate", t.degenerate},
                                          {"not_applicable", t.not_applicable}};
    }
    const SuiteConfig& c = report.config;
    nlohmann::ordered_json j;
    j["type"] = "summary";
    j["base_min"] = c.base_min;
    j["base_max"] = c.base_max;
    j["max_n"] = c.max_n;
    j["rs_min"] = c.rs_min;
    j["rs_max"] = c.rs_max;
    j["qp_max"] = c.qp_max;
    j["mj_max"] = c.mj_max;
    j["empty"] = report.empty();
    j["failures"] = report.total_failures();
    j["claims"] = std::move(claims);
    return j;
}

inline void write_summary(std::ostream& os, const SuiteReport& report, OutputFormat format)
{
    switch (format) {
    case OutputFormat::plain: {
        const SuiteConfig& c = report.config;
        os << "suite: bases " << c.base_min << ".." << c.base_max << ", n <= " << c.max_n << ", r,s in [" << c.rs_min
           << ',' << c.rs_max << "], q,p <= " << c.qp_max << ", m,j <= " << c.mj_max << '\n';
        if (report.empty())
            os << "empty report: no claim instances in range\n";
        for (const auto& info : claim_table) {
            if (!report.config.selected(info.id))
                continue;
            const ClaimTally& t = report.tally(info.id);
            os << info.name << ": holds " << t.holds << ", fails " << t.fails << ", degenerate " << t.degenerate
               << ", not_applicable " << t.not_applicable << '\n';
        }
        os << "failures: " << report.total_failures() << '\n';
        break;
    }
    case OutputFormat::json:
        os << summary_json(report).dump() << '\n';
        break;
    case OutputFormat::csv:
        os << summary_csv_header << '\n';
        for (const auto& info : claim_table) {
            if (!report.config.selected(info.id))
                continue;
            const ClaimTally& t = report.tally(info.id);
            os << info.name << ',' << t.holds << ',' << t.fails << ',' << t.degenerate << ',' << t.not_applicable
               << '\n';
        }
        break;
    }
}

/// Records (every record when kept, otherwise the failures) then the summary.
inline void write_report(std::ostream& os, const SuiteReport& report, OutputFormat format)
{
    const auto& records = report.config.keep_records ? report.records : report.failures;
    if (format == OutputFormat::csv)
        os << record_csv_header << '\n';
    for (const auto& r : records)
        write_record(os, r, format);
    if (format == OutputFormat::csv)
        os << '\n';
    write_summary(os, report, format);
}

} // namespace circprime
