#include "ncg/harness.hpp"

#include "ncg/catalog.hpp"
#include "ncg/gf.hpp"
#include "ncg/planarity.hpp"
#include "ncg/todd_coxeter.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <thread>

namespace ncg {

namespace {

using json = nlohmann::json;

GroupSpec spec_of(Family f, std::map<std::string, std::int64_t> params = {}) {
  return GroupSpec::make(f, std::move(params));
}

GroupTable cyclic_square(std::int64_t p) {
  const auto zp = build(spec_of(Family::Cyclic, {{"k", p}}));
  return direct_product(zp, zp);
}

// D_2m, with D_4 read as the Klein four-group.
GroupTable dihedral_reference(std::int64_t m) {
  if (m == 2) return cyclic_square(2);
  return build(spec_of(Family::Dihedral, {{"m", m}}));
}

bool elementary_abelian_square(const GroupTable& q, std::int64_t p) {
  if (q.order() != static_cast<std::size_t>(p * p) || !is_abelian(q)) return false;
  for (Elem x = 0; x < q.order(); ++x) {
    if (x != q.identity() && element_order(q, x) != static_cast<std::size_t>(p)) return false;
  }
  return true;
}

std::optional<std::int64_t> prime_root(std::int64_t v, int exponent) {
  for (std::int64_t p = 2; p <= v; ++p) {
    std::int64_t t = 1;
    for (int i = 0; i < exponent; ++i) t *= p;
    if (t == v) return gf::is_prime(p) ? std::optional<std::int64_t>(p) : std::nullopt;
    if (t > v) break;
  }
  return std::nullopt;
}

std::int64_t smallest_prime_divisor(std::int64_t v) {
  for (std::int64_t p = 2; p * p <= v; ++p) {
    if (v % p == 0) return p;
  }
  return v;
}

std::string iso_name(const GroupTable& q) { return "G/Z(G) (order " + std::to_string(q.order()) + ")"; }

// Fills the formula parameters for `id` and the structural checks its
// hypothesis needs. Returns a failure reason, or nullopt when all hold.
class HypothesisProbe {
 public:
  HypothesisProbe(const GroupTable& g, CaseResult& out) : g_(g), out_(out) {}

  std::optional<std::string> run(ResultId id) {
    const auto z = static_cast<std::int64_t>(out_.centerSize);
    const auto order = static_cast<std::int64_t>(g_.order());
    auto& params = out_.formulaParams;
    const auto& spec = g_.spec();
    switch (id) {
      case ResultId::Thm2_1: {
        params["z"] = z;
        const auto& q = quotient();
        if (!check("|G/Z(G)| = 20", q.order() == 20)) return fail();
        check("G/Z(G) ~ Sz(2)", iso_check_small(q, build(spec_of(Family::SuzukiSz2))));
        break;
      }
      case ResultId::Thm2_2:
      case ResultId::Prop4_4: {
        params["z"] = z;
        const auto p = prime_root(order / z, 2);
        if (!check("|G/Z(G)| = p^2", p.has_value())) return fail();
        params["p"] = *p;
        quotient_is_pp(*p);
        if (id == ResultId::Prop4_4) {
          params.clear();
          listed_order_16();
        }
        break;
      }
      case ResultId::Cor2_3: {
        const auto p = prime_root(order, 3);
        if (!check("|G| = p^3", p.has_value())) return fail();
        params["p"] = *p;
        check("|Z(G)| = p", z == *p);
        quotient_is_pp(*p);
        break;
      }
      case ResultId::Thm2_4: {
        params["z"] = z;
        const auto quot = order / z;
        if (!check("|G/Z(G)| even and >= 4", quot % 2 == 0 && quot >= 4)) return fail();
        params["m"] = quot / 2;
        quotient_is_dihedral(quot / 2);
        break;
      }
      case ResultId::Cor2_5: {
        if (!family(spec, Family::Metacyclic)) return fail();
        const auto m = spec.param("m");
        params["m"] = m;
        params["n"] = spec.param("n");
        quotient_is_dihedral(m % 2 != 0 ? m : m / 2);
        break;
      }
      case ResultId::Cor2_6: {
        if (!family(spec, Family::Dihedral)) return fail();
        const auto m = spec.param("m");
        params["m"] = m;
        quotient_is_dihedral(m % 2 != 0 ? m : m / 2);
        break;
      }
      case ResultId::Cor2_7: {
        if (!family(spec, Family::GeneralizedQuaternion)) return fail();
        params["m"] = spec.param("m");
        check("|Z(G)| = 2", z == 2);
        quotient_is_dihedral(spec.param("m"));
        break;
      }
      case ResultId::Prop3_1: {
        const auto p = smallest_prime_divisor(order);
        const auto q = order / p;
        if (!check("|G| = pq with p < q primes", p < q && gf::is_prime(q))) return fail();
        check("p | q - 1", (q - 1) % p == 0);
        params["p"] = p;
        params["q"] = q;
        check("|Z(G)| = 1", z == 1);
        break;
      }
      case ResultId::Prop3_2:
        if (!family(spec, Family::Quasidihedral)) return fail();
        params["n"] = spec.param("n");
        check("|Z(G)| = 2", z == 2);
        break;
      case ResultId::Prop3_3:
        if (!family(spec, Family::PSL2)) return fail();
        params["k"] = spec.param("k");
        check("Z(G) trivial", z == 1);
        break;
      case ResultId::Prop3_4:
        if (!family(spec, Family::GL2)) return fail();
        params["q"] = spec.param("q");
        check("|Z(G)| = q - 1", z == spec.param("q") - 1);
        break;
      case ResultId::Prop3_5:
        if (!family(spec, Family::HanakiU)) return fail();
        params["n"] = spec.param("n");
        check("|Z(G)| = 2^n", z == (std::int64_t{1} << spec.param("n")));
        break;
      case ResultId::Prop3_6: {
        if (!family(spec, Family::HanakiV)) return fail();
        params["p"] = spec.param("p");
        params["n"] = spec.param("n");
        std::int64_t pn = 1;
        for (std::int64_t i = 0; i < spec.param("n"); ++i) pn *= spec.param("p");
        check("|Z(G)| = p^n", z == pn);
        break;
      }
      case ResultId::Prop4_1:
        params["z"] = z;
        check("|Cent(G)| = 4", out_.centralizers == 4);
        break;
      case ResultId::Cor4_2: {
        params["z"] = z;
        const auto p = smallest_prime_divisor(order);
        std::int64_t rest = order;
        while (rest % p == 0) rest /= p;
        if (!check("G is a p-group", rest == 1)) return fail();
        params["p"] = p;
        check("|Cent(G)| = p + 2", out_.centralizers == static_cast<std::size_t>(p + 2));
        break;
      }
      case ResultId::Prop4_3:
        params["z"] = z;
        check("|Cent(G)| = 5", out_.centralizers == 5);
        break;
      case ResultId::PropPr1: {
        params["z"] = z;
        const auto p = smallest_prime_divisor(order);
        params["p"] = p;
        check("Pr(G) = (p^2 + p - 1)/p^3", out_.pr.byPairs == make_rational(p * p + p - 1, p * p * p));
        break;
      }
      case ResultId::PropPr2: {
        const std::vector<Rational> allowed{Rational(5, 14), Rational(2, 5), Rational(11, 27), Rational(1, 2)};
        check("Pr(G) in {5/14, 2/5, 11/27, 1/2}",
              std::find(allowed.begin(), allowed.end(), out_.pr.byPairs) != allowed.end());
        break;
      }
      case ResultId::ThmPlanar:
        check("non-commuting graph planar", planar());
        break;
    }
    return fail();
  }

 private:
  bool check(std::string name, bool passed) {
    out_.checks.push_back({std::move(name), passed});
    return passed;
  }

  std::optional<std::string> fail() const {
    for (const auto& c : out_.checks) {
      if (!c.passed) return "hypothesis check failed: " + c.name;
    }
    return std::nullopt;
  }

  bool family(const GroupSpec& spec, Family f) {
    return check("family " + std::string(family_name(f)), spec.family == f);
  }

  const GroupTable& quotient() {
    if (!quotient_) quotient_ = quotient_by_center(g_);
    return *quotient_;
  }

  void quotient_is_pp(std::int64_t p) {
    const auto& q = quotient();
    const auto name = "G/Z(G) ~ Z" + std::to_string(p) + " x Z" + std::to_string(p);
    if (q.order() <= kIsoCheckLimit) {
      check(name, q.order() == static_cast<std::size_t>(p * p) && iso_check_small(q, cyclic_square(p)));
    } else {
      check(name, elementary_abelian_square(q, p));
    }
  }

  void quotient_is_dihedral(std::int64_t m) {
    const auto& q = quotient();
    const auto name = m == 2 ? std::string("G/Z(G) ~ Z2 x Z2") : "G/Z(G) ~ D" + std::to_string(2 * m);
    if (q.order() != static_cast<std::size_t>(2 * m)) {
      check(name, false);
    } else if (q.order() > kIsoCheckLimit) {
      check(name + " (" + iso_name(q) + " beyond iso-check limit)", false);
    } else {
      check(name, iso_check_small(q, dihedral_reference(m)));
    }
  }

  void listed_order_16() {
    static const std::vector<GroupSpec> listed = {
        GroupSpec::product(spec_of(Family::Dihedral, {{"m", 4}}), spec_of(Family::Cyclic, {{"k", 2}})),
        GroupSpec::product(spec_of(Family::GeneralizedQuaternion, {{"m", 2}}), spec_of(Family::Cyclic, {{"k", 2}})),
        spec_of(Family::M16),
        spec_of(Family::Z4SemidirectZ4),
        spec_of(Family::D8StarZ4),
        spec_of(Family::SG16_3),
    };
    bool found = false;
    if (g_.order() == 16) {
      for (const auto& s : listed) {
        if (iso_check_small(g_, build(s))) {
          found = true;
          break;
        }
      }
    }
    check("G isomorphic to a listed order-16 group", found);
  }

  bool planar() {
    const auto graph = non_commuting_graph(g_);
    const auto v = graph.vertex_count();
    if (v <= kMaxPlanarityVertices) return is_planar(graph);
    if (v >= 3 && graph.edge_count() > 3 * v - 6) return false;
    throw std::runtime_error("planarity undecided: graph exceeds " + std::to_string(kMaxPlanarityVertices) +
                             " vertices and meets the Euler bound");
  }

  const GroupTable& g_;
  CaseResult& out_;
  std::optional<GroupTable> quotient_;
};

}  // namespace

std::string_view oracle_name(OracleMode m) {
  switch (m) {
    case OracleMode::CliqueOnly:
      return "clique";
    case OracleMode::NumericOnly:
      return "numeric";
    case OracleMode::Both:
      return "both";
  }
  return "both";
}

std::optional<OracleMode> parse_oracle(std::string_view name) {
  if (name == "clique" || name == "cliqueOnly") return OracleMode::CliqueOnly;
  if (name == "numeric" || name == "numericOnly") return OracleMode::NumericOnly;
  if (name == "both") return OracleMode::Both;
  return std::nullopt;
}

std::string_view verdict_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::Match:
      return "Match";
    case VerdictKind::Mismatch:
      return "Mismatch";
    case VerdictKind::HypothesisFailed:
      return "HypothesisFailed";
    case VerdictKind::NotApplicable:
      return "NotApplicable";
    case VerdictKind::Error:
      return "Error";
  }
  return "Error";
}

std::string case_id(const std::optional<ResultId>& result, const GroupSpec& spec) {
  return (result ? std::string(result_name(*result)) : std::string("-")) + ":" + spec.name();
}

CaseResult run_case(const GroupSpec& spec, std::optional<ResultId> result, const CaseOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  CaseResult out;
  out.caseId = case_id(result, spec);
  out.result = result;
  out.spec = spec;
  out.oracle = options.oracle;
  auto error = [&](std::string reason) {
    out.verdict = Verdict{VerdictKind::Error, Rational(0), std::move(reason)};
  };
  try {
    const auto g = build(spec);
    out.order = g.order();
    out.centerSize = center(g).size();
    out.centralizers = centralizer_count(g);
    out.pr = commutativity_degree_both(g);

    const auto graph = non_commuting_graph(g);
    out.vertices = graph.vertex_count();
    out.edges = graph.edge_count();
    out.cliques = clique_decomposition(complement(graph));

    std::optional<LaplacianSpectrum> byCliques;
    std::optional<LaplacianSpectrum> byNumeric;
    if (options.oracle != OracleMode::NumericOnly && out.cliques) {
      byCliques = spectrum_from_cliques(*out.cliques, out.vertices);
    }
    if (options.oracle != OracleMode::CliqueOnly) byNumeric = spectrum_numeric(graph, options.numeric);
    out.spectrum = byNumeric ? *byNumeric : byCliques.value_or(LaplacianSpectrum{});
    if (byCliques && byNumeric) out.oraclesAgree = *byCliques == *byNumeric;
    out.lIntegral = is_l_integral(out.spectrum);

    if (options.oracle == OracleMode::CliqueOnly && !byCliques) {
      error("commuting graph is not a union of cliques; the clique oracle does not apply");
    } else if (byNumeric && !byNumeric->certified) {
      error("numeric spectrum not certified: " + byNumeric->warning);
    } else if (options.oracle == OracleMode::Both && !byCliques) {
      error("commuting graph is not a union of cliques; only the numeric oracle ran");
    } else if (!out.oraclesAgree) {
      error("spectrum oracles disagree: " + byCliques->to_string() + " vs " + byNumeric->to_string());
    } else if (!out.pr.agree()) {
      error("commutativity degree disagrees between pair count and class count");
    } else {
      out.leComputed = laplacian_energy(out.spectrum, out.edges, out.vertices);
      if (!result) {
        out.verdict = Verdict{VerdictKind::NotApplicable, Rational(0), {}};
      } else if (auto reason = HypothesisProbe(g, out).run(*result)) {
        out.verdict = Verdict{VerdictKind::HypothesisFailed, Rational(0), *reason};
      } else {
        const PaperCase pc{*result, out.formulaParams};
        out.lePaper = paper_value(pc);
        out.hint = ground_truth_hint(pc);
        if (out.lePaper->contains(out.leComputed)) {
          out.verdict = Verdict{VerdictKind::Match, Rational(0), {}};
        } else {
          out.verdict = Verdict{VerdictKind::Mismatch, out.lePaper->delta(out.leComputed), {}};
        }
      }
    }
  } catch (const HypothesisError& e) {
    out.verdict = Verdict{VerdictKind::HypothesisFailed, Rational(0), e.what()};
  } catch (const std::exception& e) {
    error(e.what());
  }
  out.wallTimeMs = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return out;
}

namespace {

std::vector<std::int64_t> expand_values(const json& v, const std::string& key) {
  if (v.is_number_integer()) return {v.get<std::int64_t>()};
  if (v.is_array()) {
    std::vector<std::int64_t> out;
    for (const auto& x : v) {
      if (!x.is_number_integer()) throw std::invalid_argument("parameter " + key + ": list entries must be integers");
      out.push_back(x.get<std::int64_t>());
    }
    if (out.empty()) throw std::invalid_argument("parameter " + key + ": empty list");
    return out;
  }
  if (v.is_object() && v.contains("from") && v.contains("to")) {
    const auto from = v.at("from").get<std::int64_t>();
    const auto to = v.at("to").get<std::int64_t>();
    if (from > to) throw std::invalid_argument("parameter " + key + ": empty range");
    if (to - from > 10000) throw std::invalid_argument("parameter " + key + ": range too long");
    std::vector<std::int64_t> out;
    for (auto x = from; x <= to; ++x) out.push_back(x);
    return out;
  }
  throw std::invalid_argument("parameter " + key + ": expected integer, list or {from,to}");
}

std::vector<GroupSpec> expand_group(const json& node) {
  if (!node.is_object() || !node.contains("family")) throw std::invalid_argument("group entry needs a family");
  const auto name = node.at("family").get<std::string>();
  const auto family = parse_family(name);
  if (!family) throw std::invalid_argument("unknown family: " + name);

  if (*family == Family::DirectProduct) {
    if (!node.contains("factors") || !node.at("factors").is_array() || node.at("factors").size() != 2) {
      throw std::invalid_argument("DirectProduct needs exactly two factors");
    }
    std::vector<GroupSpec> out;
    for (const auto& a : expand_group(node.at("factors")[0])) {
      for (const auto& b : expand_group(node.at("factors")[1])) out.push_back(GroupSpec::product(a, b));
    }
    return out;
  }
  if (*family == Family::Presentation) {
    const auto gens = node.at("generators").get<std::vector<std::string>>();
    const auto rels = node.at("relators").get<std::vector<std::string>>();
    const auto bound = node.value("cosetBound", std::size_t{10000});
    return {GroupSpec::from_presentation(make_presentation(gens, rels, bound))};
  }

  std::vector<std::map<std::string, std::int64_t>> combos{{}};
  if (node.contains("params")) {
    if (!node.at("params").is_object()) throw std::invalid_argument("params must be an object");
    for (const auto& [key, value] : node.at("params").items()) {
      std::vector<std::map<std::string, std::int64_t>> next;
      for (const auto& combo : combos) {
        for (auto x : expand_values(value, key)) {
          auto c = combo;
          c[key] = x;
          next.push_back(std::move(c));
        }
      }
      combos = std::move(next);
    }
  }
  std::vector<GroupSpec> out;
  for (auto& c : combos) out.push_back(GroupSpec::make(*family, std::move(c)));
  return out;
}

}  // namespace

SweepConfig parse_sweep_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("sweep config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("sweep config must be a JSON object");
  SweepConfig cfg;
  try {
    cfg.maxGroupOrder = doc.value("maxGroupOrder", std::size_t{600});
    if (cfg.maxGroupOrder > kMaxGroupOrder) {
      throw std::invalid_argument("maxGroupOrder exceeds " + std::to_string(kMaxGroupOrder));
    }
    if (doc.contains("oracle")) {
      const auto mode = parse_oracle(doc.at("oracle").get<std::string>());
      if (!mode) throw std::invalid_argument("oracle must be clique, numeric or both");
      cfg.oracle = *mode;
    }
    cfg.threads = doc.value("threads", 0u);
    for (const auto& entry : doc.value("cases", json::array())) {
      const auto rname = entry.at("result").get<std::string>();
      const auto rid = parse_result(rname);
      if (!rid) throw std::invalid_argument("unknown result: " + rname);
      for (auto& spec : expand_group(entry)) cfg.cases.push_back({*rid, std::move(spec)});
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed sweep config: ") + e.what());
  }
  return cfg;
}

const std::string& default_sweep_json() {
  static const std::string text = R"({
  "maxGroupOrder": 600,
  "oracle": "both",
  "cases": [
    {"result": "Thm2.1", "family": "SuzukiSz2"},
    {"result": "Thm2.1", "family": "DirectProduct",
     "factors": [{"family": "SuzukiSz2"}, {"family": "Cyclic", "params": {"k": [2, 3]}}]},
    {"result": "Thm2.2", "family": "Dihedral", "params": {"m": 4}},
    {"result": "Thm2.2", "family": "GeneralizedQuaternion", "params": {"m": 2}},
    {"result": "Thm2.2", "family": "ExtraspecialP3", "params": {"p": 3, "exponent": [3, 9]}},
    {"result": "Thm2.2", "family": "ExtraspecialP3", "params": {"p": 5, "exponent": [5, 25]}},
    {"result": "Thm2.2", "family": "HanakiV", "params": {"p": [2, 3], "n": 1}},
    {"result": "Thm2.2", "family": "HanakiU", "params": {"n": 2}},
    {"result": "Thm2.2", "family": "M16"},
    {"result": "Thm2.2", "family": "Z4SemidirectZ4"},
    {"result": "Thm2.2", "family": "D8StarZ4"},
    {"result": "Thm2.2", "family": "SG16_3"},
    {"result": "Thm2.2", "family": "DirectProduct",
     "factors": [{"family": "Dihedral", "params": {"m": 4}}, {"family": "Cyclic", "params": {"k": [2, 3]}}]},
    {"result": "Thm2.2", "family": "DirectProduct",
     "factors": [{"family": "GeneralizedQuaternion", "params": {"m": 2}}, {"family": "Cyclic", "params": {"k": 2}}]},
    {"result": "Cor2.3", "family": "Dihedral", "params": {"m": 4}},
    {"result": "Cor2.3", "family": "GeneralizedQuaternion", "params": {"m": 2}},
    {"result": "Cor2.3", "family": "ExtraspecialP3", "params": {"p": 3, "exponent": [3, 9]}},
    {"result": "Cor2.3", "family": "ExtraspecialP3", "params": {"p": 5, "exponent": [5, 25]}},
    {"result": "Thm2.4", "family": "Dihedral", "params": {"m": {"from": 3, "to": 8}}},
    {"result": "Thm2.4", "family": "GeneralizedQuaternion", "params": {"m": {"from": 2, "to": 6}}},
    {"result": "Thm2.4", "family": "DirectProduct",
     "factors": [{"family": "Dihedral", "params": {"m": [3, 5]}}, {"family": "Cyclic", "params": {"k": [2, 3]}}]},
    {"result": "Cor2.5", "family": "Metacyclic", "params": {"m": {"from": 3, "to": 6}, "n": {"from": 1, "to": 3}}},
    {"result": "Cor2.6", "family": "Dihedral", "params": {"m": {"from": 3, "to": 12}}},
    {"result": "Cor2.7", "family": "GeneralizedQuaternion", "params": {"m": {"from": 2, "to": 8}}},
    {"result": "Prop3.1", "family": "FrobeniusPQ", "params": {"p": 2, "q": [3, 5, 7]}},
    {"result": "Prop3.1", "family": "FrobeniusPQ", "params": {"p": 3, "q": 7}},
    {"result": "Prop3.1", "family": "FrobeniusPQ", "params": {"p": 5, "q": 11}},
    {"result": "Prop3.2", "family": "Quasidihedral", "params": {"n": [4, 5, 6]}},
    {"result": "Prop3.3", "family": "PSL2", "params": {"k": 2}},
    {"result": "Prop3.4", "family": "GL2", "params": {"q": [3, 4]}},
    {"result": "Prop3.5", "family": "HanakiU", "params": {"n": [2, 3]}},
    {"result": "Prop3.6", "family": "HanakiV", "params": {"p": [2, 3, 5], "n": 1}},
    {"result": "Prop3.6", "family": "HanakiV", "params": {"p": 2, "n": 2}},
    {"result": "Prop4.1", "family": "Dihedral", "params": {"m": 4}},
    {"result": "Prop4.1", "family": "GeneralizedQuaternion", "params": {"m": 2}},
    {"result": "Prop4.1", "family": "HanakiV", "params": {"p": 2, "n": 1}},
    {"result": "Prop4.1", "family": "M16"},
    {"result": "Prop4.1", "family": "Z4SemidirectZ4"},
    {"result": "Prop4.1", "family": "D8StarZ4"},
    {"result": "Prop4.1", "family": "SG16_3"},
    {"result": "Prop4.1", "family": "DirectProduct",
     "factors": [{"family": "Dihedral", "params": {"m": 4}}, {"family": "Cyclic", "params": {"k": 2}}]},
    {"result": "Prop4.1", "family": "DirectProduct",
     "factors": [{"family": "GeneralizedQuaternion", "params": {"m": 2}}, {"family": "Cyclic", "params": {"k": 2}}]},
    {"result": "Cor4.2", "family": "Dihedral", "params": {"m": 4}},
    {"result": "Cor4.2", "family": "ExtraspecialP3", "params": {"p": 3, "exponent": [3, 9]}},
    {"result": "Cor4.2", "family": "HanakiV", "params": {"p": 3, "n": 1}},
    {"result": "Prop4.3", "family": "Dihedral", "params": {"m": [3, 6]}},
    {"result": "Prop4.3", "family": "GeneralizedQuaternion", "params": {"m": 3}},
    {"result": "Prop4.3", "family": "ExtraspecialP3", "params": {"p": 3, "exponent": [3, 9]}},
    {"result": "Prop4.3", "family": "DirectProduct",
     "factors": [{"family": "Dihedral", "params": {"m": 3}}, {"family": "Cyclic", "params": {"k": 2}}]},
    {"result": "PropPr1", "family": "Dihedral", "params": {"m": 4}},
    {"result": "PropPr1", "family": "GeneralizedQuaternion", "params": {"m": 2}},
    {"result": "PropPr1", "family": "ExtraspecialP3", "params": {"p": 3, "exponent": [3, 9]}},
    {"result": "PropPr1", "family": "M16"},
    {"result": "PropPr1", "family": "SG16_3"},
    {"result": "PropPr2", "family": "Dihedral", "params": {"m": [3, 5, 7]}},
    {"result": "PropPr2", "family": "GeneralizedQuaternion", "params": {"m": 3}},
    {"result": "PropPr2", "family": "ExtraspecialP3", "params": {"p": 3, "exponent": 3}},
    {"result": "Prop4.4", "family": "M16"},
    {"result": "Prop4.4", "family": "Z4SemidirectZ4"},
    {"result": "Prop4.4", "family": "D8StarZ4"},
    {"result": "Prop4.4", "family": "SG16_3"},
    {"result": "Prop4.4", "family": "DirectProduct",
     "factors": [{"family": "Dihedral", "params": {"m": 4}}, {"family": "Cyclic", "params": {"k": 2}}]},
    {"result": "Prop4.4", "family": "DirectProduct",
     "factors": [{"family": "GeneralizedQuaternion", "params": {"m": 2}}, {"family": "Cyclic", "params": {"k": 2}}]},
    {"result": "ThmPlanar", "family": "Dihedral", "params": {"m": [3, 4]}},
    {"result": "ThmPlanar", "family": "GeneralizedQuaternion", "params": {"m": 2}}
  ]
}
)";
  return text;
}

SweepConfig default_sweep() { return parse_sweep_config(default_sweep_json()); }

std::vector<CaseResult> run_sweep(const SweepConfig& cfg) {
  if (cfg.maxGroupOrder > kMaxGroupOrder) throw std::invalid_argument("maxGroupOrder exceeds the table limit");
  std::vector<SweepCase> cases;
  for (const auto& c : cfg.cases) {
    std::optional<std::int64_t> order;
    try {
      order = expected_order(c.spec);
    } catch (const SpecError&) {
      // invalid specs still run so the error is reported per case
    }
    if (order && *order > static_cast<std::int64_t>(cfg.maxGroupOrder)) continue;
    cases.push_back(c);
  }
  std::sort(cases.begin(), cases.end(), [](const SweepCase& a, const SweepCase& b) {
    if (spec_less(a.spec, b.spec)) return true;
    if (spec_less(b.spec, a.spec)) return false;
    return a.result < b.result;
  });
  cases.erase(std::unique(cases.begin(), cases.end(),
                          [](const SweepCase& a, const SweepCase& b) { return a.result == b.result && a.spec == b.spec; }),
              cases.end());

  unsigned threads = cfg.threads;
  if (threads == 0) {
    if (const char* env = std::getenv("NCG_THREADS")) threads = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
  }
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, cases.size())));

  std::vector<CaseResult> results(cases.size());
  std::atomic<std::size_t> next{0};
  CaseOptions options;
  options.oracle = cfg.oracle;
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) results[i] = run_case(cases[i].spec, cases[i].result, options);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

std::vector<GroupSpec> survey_groups(std::size_t maxOrder) {
  if (maxOrder > 16) throw std::invalid_argument("planarity survey is limited to order 16");
  std::vector<GroupSpec> all;
  for (std::int64_t m = 3; m <= 8; ++m) all.push_back(spec_of(Family::Dihedral, {{"m", m}}));
  for (std::int64_t m = 2; m <= 4; ++m) all.push_back(spec_of(Family::GeneralizedQuaternion, {{"m", m}}));
  all.push_back(spec_of(Family::Quasidihedral, {{"n", 4}}));
  for (std::int64_t m = 3; m <= 8; ++m) {
    for (std::int64_t n = 1; 2 * m * n <= 16; ++n) all.push_back(spec_of(Family::Metacyclic, {{"m", m}, {"n", n}}));
  }
  for (std::int64_t q : {3, 5, 7}) all.push_back(spec_of(Family::FrobeniusPQ, {{"p", 2}, {"q", q}}));
  all.push_back(spec_of(Family::M16));
  all.push_back(spec_of(Family::Z4SemidirectZ4));
  all.push_back(spec_of(Family::D8StarZ4));
  all.push_back(spec_of(Family::SG16_3));
  all.push_back(spec_of(Family::HanakiU, {{"n", 2}}));
  all.push_back(spec_of(Family::HanakiV, {{"p", 2}, {"n", 1}}));
  all.push_back(spec_of(Family::ExtraspecialP3, {{"p", 2}, {"exponent", 4}}));
  all.push_back(GroupSpec::product(spec_of(Family::Dihedral, {{"m", 3}}), spec_of(Family::Cyclic, {{"k", 2}})));
  all.push_back(GroupSpec::product(spec_of(Family::Dihedral, {{"m", 4}}), spec_of(Family::Cyclic, {{"k", 2}})));
  all.push_back(
      GroupSpec::product(spec_of(Family::GeneralizedQuaternion, {{"m", 2}}), spec_of(Family::Cyclic, {{"k", 2}})));
  std::vector<GroupSpec> out;
  for (auto& s : all) {
    if (*expected_order(s) <= static_cast<std::int64_t>(maxOrder)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), spec_less);
  return out;
}

PlanaritySurvey planarity_survey(std::size_t maxOrder) {
  PlanaritySurvey survey;
  const std::vector<GroupTable> expected = {build(spec_of(Family::Dihedral, {{"m", 3}})),
                                            build(spec_of(Family::Dihedral, {{"m", 4}})),
                                            build(spec_of(Family::GeneralizedQuaternion, {{"m", 2}}))};
  std::vector<bool> seen(expected.size(), false);
  std::vector<std::string> stray;
  for (const auto& spec : survey_groups(maxOrder)) {
    const auto g = build(spec);
    const auto graph = non_commuting_graph(g);
    SurveyRow row;
    row.spec = spec;
    row.order = g.order();
    row.vertices = graph.vertex_count();
    row.edges = graph.edge_count();
    row.planar = is_planar(graph);
    const auto cliques = clique_decomposition(complement(graph));
    const auto spectrum = cliques ? spectrum_from_cliques(*cliques, row.vertices) : spectrum_numeric(graph);
    row.le = laplacian_energy(spectrum, row.edges, row.vertices);
    if (row.planar) {
      bool known = false;
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (expected[i].order() == g.order() && iso_check_small(expected[i], g)) {
          seen[i] = true;
          known = true;
        }
      }
      if (!known) stray.push_back(spec.name());
    }
    survey.rows.push_back(std::move(row));
  }
  bool allSeen = true;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (expected[i].order() <= maxOrder && !seen[i]) allSeen = false;
  }
  survey.planarSetAsExpected = stray.empty() && allSeen;
  if (!stray.empty()) {
    survey.message = "planar groups outside {S3, D8, Q8}:";
    for (const auto& s : stray) survey.message += " " + s;
  } else if (!allSeen) {
    survey.message = "some of S3, D8, Q8 missing from the planar set";
  } else {
    survey.message = "planar set is {S3, D8, Q8} up to isomorphism";
  }
  return survey;
}

int exit_code(const std::vector<CaseResult>& results) {
  int code = 0;
  for (const auto& r : results) {
    if (r.verdict.kind == VerdictKind::Error) return 1;
    if (r.verdict.kind == VerdictKind::Mismatch || r.verdict.kind == VerdictKind::HypothesisFailed) code = 2;
  }
  return code;
}

std::vector<ExpectedMismatch> parse_expected_errata(const std::string& text) {
  std::vector<ExpectedMismatch> out;
  try {
    const auto doc = json::parse(text);
    for (const auto& m : doc.at("mismatches")) {
      ExpectedMismatch e;
      e.caseId = m.at("caseId").get<std::string>();
      e.leComputed = parse_rational(m.at("leComputed").get<std::string>());
      const auto& paper = m.at("lePaper");
      if (paper.is_array()) {
        e.lePaper.isSet = true;
        for (const auto& v : paper) e.lePaper.values.push_back(parse_rational(v.get<std::string>()));
      } else {
        e.lePaper.values.push_back(parse_rational(paper.get<std::string>()));
      }
      out.push_back(std::move(e));
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed errata file: ") + e.what());
  }
  return out;
}

std::vector<std::string> compare_errata(const std::vector<CaseResult>& results,
                                        const std::vector<ExpectedMismatch>& expected) {
  std::vector<std::string> diffs;
  std::map<std::string, const ExpectedMismatch*> want;
  for (const auto& e : expected) want[e.caseId] = &e;
  std::map<std::string, bool> found;
  for (const auto& r : results) {
    if (r.verdict.kind != VerdictKind::Mismatch) {
      if (want.count(r.caseId)) {
        diffs.push_back(r.caseId + ": expected Mismatch, got " + std::string(verdict_name(r.verdict.kind)));
        found[r.caseId] = true;
      }
      continue;
    }
    const auto it = want.find(r.caseId);
    if (it == want.end()) {
      diffs.push_back(r.caseId + ": unexpected Mismatch (computed " + to_string(r.leComputed) + ", printed " +
                      r.lePaper->to_string() + ")");
      continue;
    }
    found[r.caseId] = true;
    if (it->second->leComputed != r.leComputed || it->second->lePaper != *r.lePaper) {
      diffs.push_back(r.caseId + ": values differ (computed " + to_string(r.leComputed) + ", printed " +
                      r.lePaper->to_string() + ")");
    }
  }
  for (const auto& e : expected) {
    if (!found.count(e.caseId)) diffs.push_back(e.caseId + ": expected Mismatch not present in the sweep");
  }
  return diffs;
}

int exit_code_with_errata(const std::vector<CaseResult>& results, const std::vector<ExpectedMismatch>& expected) {
  for (const auto& r : results) {
    if (r.verdict.kind == VerdictKind::Error) return 1;
  }
  for (const auto& r : results) {
    if (r.verdict.kind == VerdictKind::HypothesisFailed) return 2;
  }
  return compare_errata(results, expected).empty() ? 0 : 2;
}

}  // namespace ncg
