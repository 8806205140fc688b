#include <gtest/gtest.h>

#include <sstream>

#include "circprime/report.hpp"

using namespace circprime;

namespace {

ClaimResult failing_record()
{
    return {ClaimId::GC39_42,
            {{"k", 2}, {"n1", 11}, {"n2", 31}, {"r", -1}, {"s", 2}},
            Verdict::fails,
            Witness{"n | k^e - 1, e > 0", 5, 341}};
}

std::string render(const ClaimResult& r, OutputFormat f)
{
    std::ostringstream os;
    write_record(os, r, f);
    return os.str();
}

} // namespace

TEST(Report, PlainRecord)
{
    EXPECT_EQ(render(failing_record(), OutputFormat::plain),
              "GC39_42 k=2 n1=11 n2=31 r=-1 s=2 fails witness: n | k^e - 1, e > 0 residue 5 mod 341\n");
    ClaimResult ok{ClaimId::T1, {{"k", 2}, {"n", 341}}, Verdict::holds, std::nullopt};
    EXPECT_EQ(render(ok, OutputFormat::plain), "T1 k=2 n=341 holds\n");
}

TEST(Report, CsvQuotesFieldsWithCommas)
{
    EXPECT_EQ(render(failing_record(), OutputFormat::csv),
              "GC39_42,k=2;n1=11;n2=31;r=-1;s=2,fails,\"n | k^e - 1, e > 0\",5,341\n");
    ClaimResult ok{ClaimId::T1, {{"k", 2}, {"n", 341}}, Verdict::holds, std::nullopt};
    EXPECT_EQ(render(ok, OutputFormat::csv), "T1,k=2;n=341,holds,,,\n");
}

TEST(Report, JsonRecordSchema)
{
    const auto j = nlohmann::json::parse(render(failing_record(), OutputFormat::json));
    EXPECT_EQ(j["type"], "record");
    EXPECT_EQ(j["claim_id"], "GC39_42");
    EXPECT_EQ(j["params"]["r"], -1);
    EXPECT_EQ(j["verdict"], "fails");
    EXPECT_EQ(j["witness"]["residue"], 5);
    EXPECT_EQ(j["witness"]["modulus"], 341);
}

TEST(Report, SummaryListsSelectedClaimsOnly)
{
    SuiteReport report;
    report.config.claims = {ClaimId::T1, ClaimId::TP44_47};
    report.tallies[static_cast<std::size_t>(ClaimId::T1)].holds = 4;
    report.tallies[static_cast<std::size_t>(ClaimId::TP44_47)].fails = 1;
    report.failures.push_back(failing_record());

    std::ostringstream os;
    write_report(os, report, OutputFormat::json);
    std::istringstream in(os.str());
    std::string first, second, extra;
    std::getline(in, first);
    std::getline(in, second);
    EXPECT_FALSE(std::getline(in, extra));
    EXPECT_EQ(nlohmann::json::parse(first)["claim_id"], "GC39_42");
    const auto summary = nlohmann::json::parse(second);
    EXPECT_EQ(summary["failures"], 1);
    EXPECT_EQ(summary["claims"].size(), 2u);
    EXPECT_EQ(summary["claims"]["T1"]["holds"], 4);
}
