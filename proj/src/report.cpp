#include "ncg/harness.hpp"

#include <json.hpp>

#include <sstream>

namespace ncg {

namespace {

using ojson = nlohmann::ordered_json;

constexpr const char* kReportVersion = "1.0";
constexpr const char* kGeneratedBy = "ncg 1.0.0";

ojson params_json(const std::map<std::string, std::int64_t>& params) {
  ojson out = ojson::object();
  for (const auto& [k, v] : params) out[k] = v;
  return out;
}

ojson spec_json(const GroupSpec& spec) {
  ojson out;
  out["family"] = std::string(family_name(spec.family));
  out["name"] = spec.name();
  out["params"] = params_json(spec.params);
  if (!spec.factors.empty()) {
    out["factors"] = ojson::array();
    for (const auto& f : spec.factors) out["factors"].push_back(spec_json(f));
  }
  return out;
}

ojson paper_json(const std::optional<PaperValue>& v) {
  if (!v) return "n/a";
  if (!v->isSet) return to_string(v->values.front());
  ojson out = ojson::array();
  for (const auto& x : v->values) out.push_back(to_string(x));
  return out;
}

ojson case_json(const CaseResult& r, const ReportOptions& options) {
  ojson c;
  c["caseId"] = r.caseId;
  c["result"] = r.result ? std::string(result_name(*r.result)) : std::string("n/a");
  c["groupSpec"] = spec_json(r.spec);
  c["formulaParams"] = params_json(r.formulaParams);
  c["order"] = r.order;
  c["centerSize"] = r.centerSize;
  c["centralizers"] = r.centralizers;
  c["vertices"] = r.vertices;
  c["edges"] = r.edges;
  if (r.cliques) {
    c["cliques"] = r.cliques->cliqueSizes;
  } else {
    c["cliques"] = nullptr;
  }
  ojson spectrum = ojson::array();
  for (const auto& e : r.spectrum.entries) spectrum.push_back(ojson::array({to_string(e.value), e.multiplicity}));
  c["spectrum"] = spectrum;
  c["certified"] = r.spectrum.certified;
  c["lIntegral"] = r.lIntegral;
  c["oracle"] = std::string(oracle_name(r.oracle));
  c["oraclesAgree"] = r.oraclesAgree;
  c["leComputed"] = to_string(r.leComputed);
  c["lePaper"] = paper_json(r.lePaper);
  c["verdict"] = std::string(verdict_name(r.verdict.kind));
  if (r.verdict.kind == VerdictKind::Mismatch) c["delta"] = to_string(r.verdict.delta);
  if (!r.verdict.reason.empty()) c["reason"] = r.verdict.reason;
  if (r.hint) c["printedSpectrumEnergy"] = to_string(*r.hint);
  c["pr"] = ojson{{"byPairs", to_string(r.pr.byPairs)}, {"byClasses", to_string(r.pr.byClasses)}, {"agree", r.pr.agree()}};
  ojson checks = ojson::array();
  for (const auto& ch : r.checks) checks.push_back(ojson{{"name", ch.name}, {"passed", ch.passed}});
  c["checks"] = checks;
  if (options.timings) c["wallTimeMs"] = r.wallTimeMs;
  return c;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string params_text(const GroupSpec& spec) {
  if (!spec.factors.empty() || spec.presentation) return spec.name();
  std::string out;
  for (const auto& [k, v] : spec.params) {
    if (!out.empty()) out += ";";
    out += k + "=" + std::to_string(v);
  }
  return out;
}

std::string paper_text(const std::optional<PaperValue>& v) {
  if (!v) return "n/a";
  std::string out;
  for (std::size_t i = 0; i < v->values.size(); ++i) {
    if (i) out += "|";
    out += to_string(v->values[i]);
  }
  return out;
}

std::string table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) text += "  ";
      text += cells[i];
      if (i + 1 < cells.size()) text += std::string(width[i] - cells[i].size(), ' ');
    }
    out << text << "\n";
  };
  line(header);
  std::vector<std::string> rule;
  for (auto w : width) rule.push_back(std::string(w, '-'));
  line(rule);
  for (const auto& row : rows) line(row);
  return out.str();
}

}  // namespace

std::optional<ReportFormat> parse_format(std::string_view name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "table") return ReportFormat::Table;
  return std::nullopt;
}

std::string emit_report(const std::vector<CaseResult>& results, ReportFormat format, const ReportOptions& options) {
  switch (format) {
    case ReportFormat::Json: {
      ojson doc;
      doc["version"] = kReportVersion;
      doc["generatedBy"] = kGeneratedBy;
      doc["cases"] = ojson::array();
      for (const auto& r : results) doc["cases"].push_back(case_json(r, options));
      return doc.dump(2) + "\n";
    }
    case ReportFormat::Csv: {
      std::string out = "caseId,family,params,vertices,edges,leComputed,lePaper,verdict,deltaAbs";
      if (options.timings) out += ",wallTimeMs";
      out += "\n";
      for (const auto& r : results) {
        const std::string delta = r.verdict.kind == VerdictKind::Mismatch ? to_string(abs_value(r.verdict.delta)) : "";
        out += csv_field(r.caseId) + "," + std::string(family_name(r.spec.family)) + "," + csv_field(params_text(r.spec)) +
               "," + std::to_string(r.vertices) + "," + std::to_string(r.edges) + "," + to_string(r.leComputed) + "," +
               csv_field(paper_text(r.lePaper)) + "," + std::string(verdict_name(r.verdict.kind)) + "," + delta;
        if (options.timings) out += "," + std::to_string(r.wallTimeMs);
        out += "\n";
      }
      return out;
    }
    case ReportFormat::Table: {
      std::vector<std::vector<std::string>> rows;
      for (const auto& r : results) {
        std::string verdict(verdict_name(r.verdict.kind));
        if (r.verdict.kind == VerdictKind::Mismatch) verdict += " (delta " + to_display(r.verdict.delta) + ")";
        if (!r.verdict.reason.empty()) verdict += ": " + r.verdict.reason;
        std::vector<std::string> row{r.caseId, std::to_string(r.vertices), std::to_string(r.edges), to_display(r.leComputed),
                                     r.lePaper ? r.lePaper->to_string() : "n/a", verdict};
        if (options.timings) row.push_back(std::to_string(r.wallTimeMs));
        rows.push_back(std::move(row));
      }
      std::vector<std::string> header{"case", "V", "E", "LE", "printed", "verdict"};
      if (options.timings) header.push_back("ms");
      return table(header, rows);
    }
  }
  return {};
}

std::string emit_survey(const PlanaritySurvey& survey, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: {
      ojson doc;
      doc["version"] = kReportVersion;
      doc["generatedBy"] = kGeneratedBy;
      doc["groups"] = ojson::array();
      for (const auto& r : survey.rows) {
        doc["groups"].push_back(ojson{{"group", r.spec.name()},
                                      {"order", r.order},
                                      {"vertices", r.vertices},
                                      {"edges", r.edges},
                                      {"planar", r.planar},
                                      {"le", to_string(r.le)}});
      }
      doc["planarSetAsExpected"] = survey.planarSetAsExpected;
      doc["message"] = survey.message;
      return doc.dump(2) + "\n";
    }
    case ReportFormat::Csv: {
      std::string out = "group,order,vertices,edges,planar,le\n";
      for (const auto& r : survey.rows) {
        out += csv_field(r.spec.name()) + "," + std::to_string(r.order) + "," + std::to_string(r.vertices) + "," +
               std::to_string(r.edges) + "," + (r.planar ? "true" : "false") + "," + to_string(r.le) + "\n";
      }
      return out;
    }
    case ReportFormat::Table: {
      std::vector<std::vector<std::string>> rows;
      for (const auto& r : survey.rows) {
        rows.push_back({r.spec.name(), std::to_string(r.order), std::to_string(r.vertices), std::to_string(r.edges),
                        r.planar ? "yes" : "no", to_display(r.le)});
      }
      return table({"group", "|G|", "V", "E", "planar", "LE"}, rows) + survey.message + "\n";
    }
  }
  return {};
}

}  // namespace ncg
