#pragma once

// Closed-form Laplacian energies as printed, evaluated exactly. Nothing here
// corrects a printed expression; comparison against computed values happens
// in the harness.

#include "ncg/rational.hpp"
#include "ncg/spectrum.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ncg {

enum class ResultId {
  Thm2_1,
  Thm2_2,
  Cor2_3,
  Thm2_4,
  Cor2_5,
  Cor2_6,
  Cor2_7,
  Prop3_1,
  Prop3_2,
  Prop3_3,
  Prop3_4,
  Prop3_5,
  Prop3_6,
  Prop4_1,
  Cor4_2,
  Prop4_3,
  PropPr1,
  PropPr2,
  Prop4_4,
  ThmPlanar,
};

/// "Thm2.1", "Cor2.6", "PropPr2", ...
std::string_view result_name(ResultId id);
std::optional<ResultId> parse_result(std::string_view name);
std::vector<ResultId> all_results();

/// Parameters a formula needs; z is |Z(G)|.
///   Thm2.1 {z}          Thm2.2 {p,z}     Cor2.3 {p}      Thm2.4 {m,z}
///   Cor2.5 {m,n}        Cor2.6 {m}       Cor2.7 {m}      Prop3.1 {p,q}
///   Prop3.2 {n}         Prop3.3 {k}      Prop3.4 {q}     Prop3.5 {n}
///   Prop3.6 {p,n}       Prop4.1 {z}      Cor4.2 {p,z}    Prop4.3 {z}
///   PropPr1 {p,z}       PropPr2 {}       Prop4.4 {}      ThmPlanar {}
std::vector<std::string> required_params(ResultId id);

struct PaperCase {
  ResultId id = ResultId::Thm2_1;
  std::map<std::string, std::int64_t> params;

  [[nodiscard]] std::int64_t param(const std::string& key) const;
};

/// Raised when a case's parameters violate the result's stated hypotheses.
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A single printed value, or a printed list of alternatives.
struct PaperValue {
  std::vector<Rational> values;
  bool isSet = false;

  [[nodiscard]] bool contains(const Rational& x) const;
  /// Printed value minus x; for sets, the member nearest to x (first on ties).
  [[nodiscard]] Rational delta(const Rational& x) const;
  /// "690/19" or "{28/3, 9/1}".
  [[nodiscard]] std::string to_string() const;
  bool operator==(const PaperValue&) const = default;
};

/// Throws HypothesisError on missing or out-of-range parameters.
void check_hypotheses(const PaperCase& c);

/// The printed closed form evaluated at the case parameters.
PaperValue paper_value(const PaperCase& c);

/// The Laplacian spectrum printed in the proof, evaluated at the case
/// parameters; results without their own display reuse the display of the
/// result they reduce to. nullopt for set-valued results.
std::optional<LaplacianSpectrum> paper_spectrum(const PaperCase& c);

/// Energy of the printed spectrum, sum mult * |mu - trace / count|.
Rational spectrum_energy(const LaplacianSpectrum& s);

/// The energy implied by the printed spectrum when it differs from the
/// printed closed form, else nullopt.
std::optional<Rational> ground_truth_hint(const PaperCase& c);

}  // namespace ncg
