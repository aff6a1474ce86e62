#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "circle_noise/report.hpp"

namespace circle_noise {
namespace {

TEST(FormatNumber, SeventeenDigitsAndNull) {
    EXPECT_EQ(format_number(0.1), "0.10000000000000001");
    EXPECT_EQ(format_number(0.0), "0");
    EXPECT_EQ(format_number(std::numeric_limits<double>::infinity()), "null");
    EXPECT_EQ(format_number(std::nan("")), "null");
    EXPECT_EQ(std::stod(format_number(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(ToJson, FieldOrderAndContent) {
    VerificationReport report;
    report.suite = "demo";
    report.config = SuiteConfig{};
    report.checks.push_back(CheckResult::within("a \"quoted\" name", 0.25, 0.25, 1e-3));
    report.checks.push_back(CheckResult::at_most("b", 2.0, 1.0, 0.0, "note"));
    const std::string text = to_json(report);

    const auto j = nlohmann::json::parse(text);
    EXPECT_EQ(j["suite"], "demo");
    EXPECT_EQ(j["config"]["N"], 1024);
    EXPECT_EQ(j["config"]["M"], 2048);
    EXPECT_EQ(j["config"]["R"], 20000);
    EXPECT_EQ(j["config"]["seed"], 42);
    ASSERT_EQ(j["checks"].size(), 2u);
    EXPECT_EQ(j["checks"][0]["name"], "a \"quoted\" name");
    EXPECT_EQ(j["checks"][0]["pass"], true);
    EXPECT_EQ(j["checks"][1]["pass"], false);
    EXPECT_EQ(j["overall_pass"], false);

    const auto pos = [&](const char* key) { return text.find(std::string("\"") + key + "\""); };
    EXPECT_LT(pos("suite"), pos("config"));
    EXPECT_LT(pos("config"), pos("checks"));
    EXPECT_LT(pos("checks"), pos("overall_pass"));
    EXPECT_LT(pos("statistic"), pos("expected"));
    EXPECT_LT(pos("expected"), pos("tolerance"));
    EXPECT_NE(text.find("0.001"), std::string::npos);
}

TEST(ToJson, NonFiniteBecomesNull) {
    VerificationReport report;
    report.suite = "x";
    report.checks.push_back(
        CheckResult::within("nan", std::nan(""), 0.0, 1.0));
    const auto j = nlohmann::json::parse(to_json(report));
    EXPECT_TRUE(j["checks"][0]["statistic"].is_null());
}

TEST(WritePathsCsv, Shape) {
    const auto ens = synthesize_ensemble(ProcessKind::levy, 8, GridSpec(20), 3, SeedSpec{1});
    std::ostringstream out;
    write_paths_csv(out, ens, "demo");
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "# demo");
    std::getline(in, line);
    EXPECT_EQ(line.rfind("replicate,t0,", 0), 0u);
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 20);
    int rows = 0;
    while (std::getline(in, line)) {
        EXPECT_EQ(std::count(line.begin(), line.end(), ','), 20);
        ++rows;
    }
    EXPECT_EQ(rows, 3);
}

TEST(WriteSpectrumCsv, Format) {
    std::ostringstream out;
    const std::vector<double> ev{0.5, 1.0};
    write_spectrum_csv(out, ev, "p");
    EXPECT_EQ(out.str(), "# p\nindex,eigenvalue\n0,0.5\n1,1\n");
}

}  // namespace
}  // namespace circle_noise
