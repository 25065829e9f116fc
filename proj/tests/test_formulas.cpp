#include "ncg/formulas.hpp"

#include <doctest.h>

using namespace ncg;

namespace {

PaperValue value(ResultId id, std::map<std::string, std::int64_t> params = {}) {
  return paper_value(PaperCase{id, std::move(params)});
}

Rational single(ResultId id, std::map<std::string, std::int64_t> params = {}) {
  const auto v = value(id, std::move(params));
  REQUIRE_FALSE(v.isSet);
  return v.values.front();
}

}  // namespace

TEST_CASE("result names round-trip") {
  for (auto id : all_results()) CHECK(parse_result(result_name(id)) == id);
  CHECK(result_name(ResultId::Thm2_1) == "Thm2.1");
  CHECK(result_name(ResultId::PropPr2) == "PropPr2");
  CHECK_FALSE(parse_result("Thm9.9").has_value());
  CHECK(required_params(ResultId::Cor2_5) == std::vector<std::string>{"m", "n"});
}

TEST_CASE("printed closed forms at sample parameters") {
  CHECK(single(ResultId::Thm2_1, {{"z", 1}}) == Rational(690, 19));
  CHECK(single(ResultId::Thm2_1, {{"z", 2}}) == Rational(1620, 19));
  CHECK(single(ResultId::Thm2_2, {{"p", 2}, {"z", 2}}) == 8);
  CHECK(single(ResultId::Thm2_2, {{"p", 3}, {"z", 3}}) == 36);
  CHECK(single(ResultId::Cor2_3, {{"p", 3}}) == 36);
  CHECK(single(ResultId::Cor2_3, {{"p", 5}}) == 200);
  CHECK(single(ResultId::Thm2_4, {{"m", 3}, {"z", 1}}) == 9);
  CHECK(single(ResultId::Thm2_4, {{"m", 3}, {"z", 2}}) == Rational(126, 5));
  CHECK(single(ResultId::Cor2_6, {{"m", 3}}) == 9);
  CHECK(single(ResultId::Cor2_6, {{"m", 5}}) == 25);
  CHECK(single(ResultId::Cor2_6, {{"m", 4}}) == Rational(28, 3));
  CHECK(single(ResultId::Cor2_7, {{"m", 2}}) == Rational(28, 3));
  CHECK(single(ResultId::Prop3_1, {{"p", 2}, {"q", 3}}) == Rational(36, 5));
  CHECK(single(ResultId::Prop3_1, {{"p", 3}, {"q", 7}}) == Rational(168, 5));
  CHECK(single(ResultId::Prop3_2, {{"n", 4}}) == Rational(304, 7));
  CHECK(single(ResultId::Prop3_2, {{"n", 5}}) == make_rational(4096 - 1024 + 96, 15));
  CHECK(single(ResultId::Prop3_3, {{"k", 2}}) == Rational(8580, 59));
  CHECK(single(ResultId::Prop3_4, {{"q", 3}}) == Rational(3156, 23));
  CHECK(single(ResultId::Prop3_5, {{"n", 2}}) == 16);
  CHECK(single(ResultId::Prop3_5, {{"n", 3}}) == 96);
  CHECK(single(ResultId::Prop3_6, {{"p", 2}, {"n", 1}}) == 8);
  CHECK(single(ResultId::Prop3_6, {{"p", 3}, {"n", 1}}) == 36);
  CHECK(single(ResultId::Prop4_1, {{"z", 2}}) == 8);
  CHECK(single(ResultId::Prop4_4) == 16);
}

TEST_CASE("set-valued results") {
  const auto pr2 = value(ResultId::PropPr2);
  CHECK(pr2.isSet);
  CHECK(pr2.contains(Rational(126, 5)));
  CHECK_FALSE(pr2.contains(36));
  CHECK(pr2.to_string() == "{9/1, 28/3, 25/1, 126/5}");
  const auto planar = value(ResultId::ThmPlanar);
  CHECK(planar.contains(9));
  CHECK(planar.delta(8) == 1);
  const auto p43 = value(ResultId::Prop4_3, {{"z", 1}});
  CHECK(p43.values == std::vector<Rational>{12, 9});
  CHECK(value(ResultId::Prop4_3, {{"z", 2}}).values == std::vector<Rational>{24, Rational(126, 5)});
}

TEST_CASE("delta is printed minus computed") {
  const auto v = value(ResultId::Cor2_6, {{"m", 3}});
  CHECK(v.delta(Rational(42, 5)) == Rational(3, 5));
  CHECK(value(ResultId::PropPr2).delta(36) == Rational(126, 5) - 36);
}

TEST_CASE("hypothesis guards follow the stated ranges") {
  CHECK_THROWS_AS(value(ResultId::Thm2_4, {{"m", 1}, {"z", 1}}), HypothesisError);
  CHECK_NOTHROW(value(ResultId::Thm2_4, {{"m", 2}, {"z", 1}}));
  CHECK_THROWS_AS(value(ResultId::Cor2_5, {{"m", 2}, {"n", 1}}), HypothesisError);
  CHECK_THROWS_AS(value(ResultId::Cor2_6, {{"m", 2}}), HypothesisError);
  CHECK_THROWS_AS(value(ResultId::Prop3_2, {{"n", 3}}), HypothesisError);
  CHECK_THROWS_AS(value(ResultId::Prop3_1, {{"p", 3}, {"q", 5}}), HypothesisError);
  CHECK_THROWS_AS(value(ResultId::Prop3_4, {{"q", 6}}), HypothesisError);
  CHECK_THROWS_AS(value(ResultId::Thm2_2, {{"p", 4}, {"z", 1}}), HypothesisError);
  CHECK_THROWS_AS(value(ResultId::Thm2_1), HypothesisError);
}

TEST_CASE("reductions between printed results") {
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (std::int64_t z : {1, 2, 3, 8}) {
      const auto t = single(ResultId::Thm2_2, {{"p", p}, {"z", z}});
      CHECK(single(ResultId::Cor4_2, {{"p", p}, {"z", z}}) == t);
      CHECK(single(ResultId::PropPr1, {{"p", p}, {"z", z}}) == t);
    }
    CHECK(single(ResultId::Cor2_3, {{"p", p}}) == single(ResultId::Thm2_2, {{"p", p}, {"z", p}}));
  }
  for (std::int64_t z = 1; z <= 6; ++z) {
    CHECK(single(ResultId::Prop4_1, {{"z", z}}) == single(ResultId::Thm2_2, {{"p", 2}, {"z", z}}));
  }
  for (std::int64_t m = 2; m <= 12; ++m) {
    CHECK(single(ResultId::Cor2_7, {{"m", m}}) == single(ResultId::Thm2_4, {{"m", m}, {"z", 2}}));
  }
  for (std::int64_t m = 3; m <= 13; m += 2) {
    CHECK(single(ResultId::Cor2_6, {{"m", m}}) == single(ResultId::Thm2_4, {{"m", m}, {"z", 1}}));
    for (std::int64_t n = 1; n <= 4; ++n) {
      CHECK(single(ResultId::Cor2_5, {{"m", m}, {"n", n}}) == single(ResultId::Thm2_4, {{"m", m}, {"z", n}}));
    }
  }
  CHECK(single(ResultId::Prop4_4) == single(ResultId::Thm2_2, {{"p", 2}, {"z", 4}}));
}

TEST_CASE("printed spectra against printed closed forms") {
  auto energy_of = [](ResultId id, std::map<std::string, std::int64_t> params) {
    const auto s = paper_spectrum(PaperCase{id, params});
    REQUIRE(s.has_value());
    return spectrum_energy(*s);
  };
  CHECK(energy_of(ResultId::Thm2_1, {{"z", 1}}) == Rational(690, 19));
  CHECK(paper_spectrum(PaperCase{ResultId::Thm2_1, {{"z", 1}}})->to_string() == "{0, 15^3, 16^10, 19^5}");
  CHECK(energy_of(ResultId::Thm2_2, {{"p", 3}, {"z", 2}}) == single(ResultId::Thm2_2, {{"p", 3}, {"z", 2}}));
  CHECK(energy_of(ResultId::Prop3_2, {{"n", 4}}) == Rational(304, 7));
  CHECK(energy_of(ResultId::Prop3_3, {{"k", 2}}) == Rational(8580, 59));
  CHECK(energy_of(ResultId::Prop3_5, {{"n", 3}}) == 96);
  CHECK(energy_of(ResultId::Prop3_6, {{"p", 3}, {"n", 1}}) == 36);
  // Where the displayed spectrum and the closed form disagree, the hint carries the spectrum's value.
  CHECK(energy_of(ResultId::Thm2_4, {{"m", 3}, {"z", 1}}) == Rational(42, 5));
  CHECK(ground_truth_hint(PaperCase{ResultId::Cor2_6, {{"m", 3}}}) == Rational(42, 5));
  CHECK(ground_truth_hint(PaperCase{ResultId::Prop3_4, {{"q", 3}}}) == Rational(3120, 23));
  CHECK_FALSE(ground_truth_hint(PaperCase{ResultId::Thm2_1, {{"z", 1}}}).has_value());
  CHECK_FALSE(paper_spectrum(PaperCase{ResultId::PropPr2, {}}).has_value());
}

TEST_CASE("printed spectra are consistent Laplacian spectra") {
  for (std::int64_t n = 4; n <= 8; ++n) {
    const auto s = *paper_spectrum(PaperCase{ResultId::Prop3_2, {{"n", n}}});
    CHECK(s.total_multiplicity() == (std::size_t{1} << n) - 2);
  }
  for (std::int64_t p : {2, 3, 5}) {
    for (std::int64_t z : {1, 2, 4}) {
      const auto s = *paper_spectrum(PaperCase{ResultId::Thm2_2, {{"p", p}, {"z", z}}});
      CHECK(s.total_multiplicity() == static_cast<std::size_t>((p * p - 1) * z));
    }
  }
}
