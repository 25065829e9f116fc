#include "ncg/catalog.hpp"
#include "ncg/harness.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace ncg;
using nlohmann::json;

namespace {

GroupSpec S(Family f, std::map<std::string, std::int64_t> p = {}) { return GroupSpec::make(f, std::move(p)); }

std::vector<CaseResult> sample() {
  return {run_case(S(Family::SuzukiSz2), ResultId::Thm2_1), run_case(S(Family::Dihedral, {{"m", 3}}), ResultId::Cor2_6),
          run_case(S(Family::Dihedral, {{"m", 3}}), ResultId::PropPr2)};
}

}  // namespace

TEST_CASE("empty report") {
  const auto doc = json::parse(emit_report({}, ReportFormat::Json));
  CHECK(doc["cases"] == json::array());
  CHECK(doc["version"] == "1.0");
  CHECK(doc.contains("generatedBy"));
}

TEST_CASE("JSON schema") {
  const auto doc = json::parse(emit_report(sample(), ReportFormat::Json));
  const auto& cases = doc["cases"];
  REQUIRE(cases.size() == 3);
  const auto& sz = cases[0];
  CHECK(sz["caseId"] == "Thm2.1:SuzukiSz2()");
  CHECK(sz["verdict"] == "Match");
  CHECK(sz["leComputed"] == "690/19");
  CHECK(sz["lePaper"] == "690/19");
  CHECK(sz["vertices"] == 19);
  CHECK(sz["edges"] == 150);
  CHECK(sz["spectrum"] == json::parse(R"([["0/1", 1], ["15/1", 3], ["16/1", 10], ["19/1", 5]])"));
  CHECK(sz["pr"]["agree"] == true);
  CHECK(sz["pr"]["byPairs"] == "1/4");
  CHECK_FALSE(sz.contains("delta"));
  CHECK_FALSE(sz.contains("wallTimeMs"));
  const auto& d6 = cases[1];
  CHECK(d6["verdict"] == "Mismatch");
  CHECK(d6["delta"] == "3/5");
  CHECK(d6["lePaper"] == "9/1");
  const auto& set = cases[2];
  CHECK(set["lePaper"] == json::parse(R"(["9/1", "28/3", "25/1", "126/5"])"));
  const auto none = json::parse(emit_report({run_case(S(Family::GL2, {{"q", 3}}), std::nullopt)}, ReportFormat::Json));
  CHECK(none["cases"][0]["lePaper"] == "n/a");
  CHECK(none["cases"][0]["verdict"] == "NotApplicable");
}

TEST_CASE("reports are byte-identical across runs") {
  for (auto f : {ReportFormat::Json, ReportFormat::Csv, ReportFormat::Table}) {
    CHECK(emit_report(sample(), f) == emit_report(sample(), f));
  }
}

TEST_CASE("timings are opt-in") {
  const auto with = json::parse(emit_report(sample(), ReportFormat::Json, ReportOptions{true}));
  CHECK(with["cases"][0].contains("wallTimeMs"));
  CHECK(emit_report(sample(), ReportFormat::Csv, ReportOptions{true}).find("wallTimeMs") != std::string::npos);
}

TEST_CASE("CSV layout") {
  const auto csv = emit_report(sample(), ReportFormat::Csv);
  const auto header = csv.substr(0, csv.find('\n'));
  CHECK(header == "caseId,family,params,vertices,edges,leComputed,lePaper,verdict,deltaAbs");
  CHECK(csv.find("Thm2.1:SuzukiSz2(),SuzukiSz2,,19,150,690/19,690/19,Match,") != std::string::npos);
  CHECK(csv.find(",Mismatch,3/5") != std::string::npos);
  std::size_t lines = 0;
  for (char ch : csv) lines += ch == '\n';
  CHECK(lines == 4);
}

TEST_CASE("table layout") {
  const auto table = emit_report(sample(), ReportFormat::Table);
  CHECK(table.find("Thm2.1:SuzukiSz2()") != std::string::npos);
  CHECK(table.find("Mismatch (delta 3/5)") != std::string::npos);
}

TEST_CASE("format names") {
  CHECK(parse_format("json") == ReportFormat::Json);
  CHECK(parse_format("csv") == ReportFormat::Csv);
  CHECK(parse_format("table") == ReportFormat::Table);
  CHECK_FALSE(parse_format("xml").has_value());
}

TEST_CASE("survey report") {
  const auto survey = planarity_survey(8);
  const auto doc = json::parse(emit_survey(survey, ReportFormat::Json));
  CHECK(doc.is_object());
  CHECK(emit_survey(survey, ReportFormat::Csv).rfind("group,order,vertices,edges,planar,le\n", 0) == 0);
}
