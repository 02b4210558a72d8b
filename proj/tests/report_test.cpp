#include <sstream>

#include <gtest/gtest.h>

#include "qgen/errors.hpp"
#include "qgen/identities.hpp"
#include "qgen/report.hpp"

using qgen::Format;
using qgen::RatFuncQ;

namespace {

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

qgen::SweepReport small_report() {
  qgen::SweepConfig config;
  config.theorems = {std::string(qgen::kShiftTwoId)};
  config.n = {0, 2};
  config.alpha = {1, 1};
  config.h = {1, 1};
  return qgen::sweep(config);
}

}  // namespace

TEST(Report, EmptyJson) {
  const std::string text = qgen::serialize_report({}, Format::Json, {{"subcommand", "verify"}});
  EXPECT_NE(text.find("\"records\": []"), std::string::npos);
  EXPECT_NE(text.find("\"summary\": {}"), std::string::npos);
  EXPECT_NE(text.find("\"tool-version\""), std::string::npos);
  EXPECT_NE(text.find("\"config-echo\""), std::string::npos);
}

TEST(Report, CsvHasOneLinePerRecord) {
  const auto report = small_report();
  ASSERT_EQ(report.records.size(), 3u);
  const std::string csv = qgen::serialize_report(report, Format::Csv);
  EXPECT_EQ(count_lines(csv), 4u);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "theorem,params,status,lhs,rhs");
  EXPECT_NE(csv.find("BOUNDARY-FAIL"), std::string::npos);
  EXPECT_NE(csv.find("BOUNDARY-PASS"), std::string::npos);
}

TEST(Report, JsonRoundTrip) {
  const auto report = small_report();
  const std::string first = qgen::serialize_report(report, Format::Json);
  const auto parsed = qgen::parse_report_json(first);
  EXPECT_EQ(parsed.records, report.records);
  EXPECT_EQ(parsed.summary, report.summary);
  EXPECT_EQ(qgen::serialize_report(parsed, Format::Json), first);
}

TEST(Report, RoundTripKeepsListParamsAndErrors) {
  std::vector<qgen::VerificationRecord> records;
  records.push_back(qgen::make_record("bernstein-multi", {{"n_list", std::vector<long>{2, 1, 1}}, {"k", 0L}},
                                      RatFuncQ(1), RatFuncQ(1)));
  qgen::VerificationRecord err;
  err.theorem = "integral-shift";
  err.params = {{"n", 3L}};
  err.status = qgen::Status::Error;
  err.note = "pole at q = 1";
  records.push_back(err);
  const auto report = qgen::summarize(records);
  EXPECT_TRUE(report.has_regression());
  const auto parsed = qgen::parse_report_json(qgen::serialize_report(report, Format::Json));
  EXPECT_EQ(parsed.records, report.records);
}

TEST(Report, ParseRejectsGarbage) {
  EXPECT_THROW(qgen::parse_report_json("not json"), qgen::ParseError);
  EXPECT_THROW(qgen::parse_report_json("{\"records\": [{\"theorem\": 1}]}"), qgen::ParseError);
  EXPECT_THROW(qgen::parse_format("xml"), qgen::ParseError);
}

TEST(Report, TableCsv) {
  std::vector<qgen::TableRow> rows{{0, 1, 1, 0, "0", {"closed-form", "umbral"}, true}};
  EXPECT_EQ(qgen::serialize_table(rows, Format::Csv), "n,alpha,h,x,value,routes,routes_agree\n0,1,1,0,0,closed-form|umbral,true\n");
}
