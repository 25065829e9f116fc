#pragma once

#include "ncg/formulas.hpp"
#include "ncg/graph.hpp"
#include "ncg/group.hpp"
#include "ncg/spectrum.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ncg {

enum class OracleMode { CliqueOnly, NumericOnly, Both };
std::string_view oracle_name(OracleMode m);
std::optional<OracleMode> parse_oracle(std::string_view name);

enum class VerdictKind { Match, Mismatch, HypothesisFailed, NotApplicable, Error };
std::string_view verdict_name(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::NotApplicable;
  Rational delta;      // printed minus computed, Mismatch only
  std::string reason;  // HypothesisFailed and Error only
};

/// One named structural check made while testing a result's hypothesis,
/// e.g. {"G/Z(G) ~ Z2 x Z2", true}.
struct Check {
  std::string name;
  bool passed = false;
};

struct CaseResult {
  std::string caseId;
  std::optional<ResultId> result;
  GroupSpec spec;
  std::map<std::string, std::int64_t> formulaParams;
  std::size_t order = 0;
  std::size_t centerSize = 0;
  std::size_t centralizers = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::optional<CliqueDecomposition> cliques;
  LaplacianSpectrum spectrum;
  OracleMode oracle = OracleMode::Both;
  bool oraclesAgree = true;
  bool lIntegral = false;
  Rational leComputed;
  std::optional<PaperValue> lePaper;
  std::optional<Rational> hint;
  CommutativityDegree pr;
  std::vector<Check> checks;
  Verdict verdict;
  std::int64_t wallTimeMs = 0;
};

struct CaseOptions {
  OracleMode oracle = OracleMode::Both;
  NumericOptions numeric;
};

/// "Thm2.1:SuzukiSz2()"; results without a formula use "-".
std::string case_id(const std::optional<ResultId>& result, const GroupSpec& spec);

/// Builds the group, checks the result's hypothesis on it, computes the
/// spectrum by the chosen oracle(s), the exact energy and the verdict.
/// Exceptions are captured as Error verdicts.
CaseResult run_case(const GroupSpec& spec, std::optional<ResultId> result, const CaseOptions& options = {});

struct SweepCase {
  ResultId result;
  GroupSpec spec;
};

struct SweepConfig {
  std::vector<SweepCase> cases;
  std::size_t maxGroupOrder = 600;
  OracleMode oracle = OracleMode::Both;
  /// 0 means NCG_THREADS, else the hardware concurrency.
  unsigned threads = 0;
};

/// Parses the JSON sweep format:
///   {"maxGroupOrder": 600, "oracle": "both",
///    "cases": [{"result": "Cor2.6", "family": "Dihedral", "params": {"m": {"from": 3, "to": 12}}},
///              {"result": "Thm2.1", "family": "DirectProduct",
///               "factors": [{"family": "SuzukiSz2"}, {"family": "Cyclic", "params": {"k": [2, 3]}}]}]}
/// A parameter is an integer, a list, or an inclusive {"from", "to"} range;
/// lists of parameters expand to their cartesian product. Throws
/// std::invalid_argument on malformed input.
SweepConfig parse_sweep_config(const std::string& json);

/// The built-in sweep as JSON text.
const std::string& default_sweep_json();
SweepConfig default_sweep();

/// Runs every case whose expected order is within maxGroupOrder, in parallel,
/// and returns results sorted by group spec then result id.
std::vector<CaseResult> run_sweep(const SweepConfig& cfg);

struct SurveyRow {
  GroupSpec spec;
  std::size_t order = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  bool planar = false;
  Rational le;
};

struct PlanaritySurvey {
  std::vector<SurveyRow> rows;
  /// Every planar row is isomorphic to S3, D8 or Q8, and each of the three occurs planar.
  bool planarSetAsExpected = false;
  std::string message;
};

/// Non-abelian catalog groups of order <= maxOrder (at most 16).
std::vector<GroupSpec> survey_groups(std::size_t maxOrder);
PlanaritySurvey planarity_survey(std::size_t maxOrder);

enum class ReportFormat { Json, Csv, Table };
std::optional<ReportFormat> parse_format(std::string_view name);

struct ReportOptions {
  bool timings = false;  // wall times vary between runs, so they are opt-in
};

std::string emit_report(const std::vector<CaseResult>& results, ReportFormat format, const ReportOptions& options = {});
std::string emit_survey(const PlanaritySurvey& survey, ReportFormat format);

/// 0 when every verdict is Match or NotApplicable, 1 if any Error, else 2.
int exit_code(const std::vector<CaseResult>& results);

struct ExpectedMismatch {
  std::string caseId;
  Rational leComputed;
  PaperValue lePaper;
};

/// Reads {"mismatches": [{"caseId", "leComputed", "lePaper"}]} where lePaper
/// is a rational string or a list of them.
std::vector<ExpectedMismatch> parse_expected_errata(const std::string& json);

/// Differences between the Mismatch verdicts in `results` and the expected
/// list: missing, unexpected, or with different values. Empty when they agree.
std::vector<std::string> compare_errata(const std::vector<CaseResult>& results,
                                        const std::vector<ExpectedMismatch>& expected);

/// Exit code under an expected-errata list: 1 on Error, 2 on any other
/// departure (errata differences or HypothesisFailed), else 0.
int exit_code_with_errata(const std::vector<CaseResult>& results, const std::vector<ExpectedMismatch>& expected);

}  // namespace ncg
