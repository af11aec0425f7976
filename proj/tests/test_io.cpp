#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fihom/io.hpp"
#include "fihom/random.hpp"
#include "fixtures.hpp"

using namespace fihom;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_presentation(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("presentations round-trip") {
  for (const auto& p : {fixtures::k0(), fixtures::free_on(2), fixtures::mixed(FieldSpec::rational()), fixtures::symmetrized()}) {
    const auto text = dump(to_json(p));
    CHECK(parse_presentation(text) == p);
    CHECK(dump(to_json(parse_presentation(text))) == text);
  }
  RandomProfile prof;
  for (std::uint64_t t = 0; t < 30; ++t) {
    auto rng = Rng::for_trial(7, t);
    const auto p = random_presentation(rng, prof);
    CHECK(parse_presentation(dump(to_json(p))) == p);
  }
}

TEST_CASE("shorthand fields and defaults") {
  const auto p = parse_presentation(R"({"field": "Q", "group": {"order": 2}, "generators": [1],
    "relations": [{"degree": 2, "terms": [{"gen": 0, "injection": [2], "coeff": "-3/2"}]}]})");
  CHECK(p.field == FieldSpec::rational());
  CHECK(p.group.order() == 2);
  CHECK(p.relations[0].terms[0].alpha.colors == std::vector<int>{0});
  CHECK(p.window == 0);
  CHECK(field_from_json(Json("F_7")) == FieldSpec::prime(7));
  CHECK(field_from_json(Json(13)) == FieldSpec::prime(13));
  CHECK(field_from_json(Json::parse(R"({"kind": "prime", "characteristic": 3})")) == FieldSpec::prime(3));
}

TEST_CASE("fuzz counterexamples are accepted as input") {
  const auto p = fixtures::k0();
  Json ce{{"seed", 1}, {"trial", 0}, {"detail", "x"}, {"presentation", to_json(p)}};
  CHECK(presentation_from_json(ce) == p);
}

TEST_CASE("diagnostics name the line or the field") {
  CHECK(contains(error_of("{\n  \"field\": \"Q\",\n  \"group\": {\"order\": 1\n}"), "line 4"));
  CHECK(contains(error_of("[1, 2"), "malformed JSON"));
  CHECK(contains(error_of(R"({"group": {"order": 1}, "generators": [], "relations": []})"), "missing field 'field'"));
  CHECK(contains(error_of(R"({"field": "F_6", "group": {"order": 1}, "generators": [], "relations": []})"), "not prime"));
  CHECK(contains(error_of(R"({"field": "Q", "group": {"order": 2, "table": [[0, 1], [0, 1]]}, "generators": [], "relations": []})"),
                 "group.table"));
  CHECK(contains(error_of(R"({"field": "Q", "group": {"order": 1}, "generators": [-1], "relations": []})"), "generators[0]"));
  const std::string base = R"({"field": "F_5", "group": {"order": 1}, "generators": [1], "relations": [{"degree": 2, "terms": [)";
  CHECK(contains(error_of(base + R"({"gen": 3, "injection": [1]}]}]})"), "relations[0].terms[0].gen"));
  CHECK(contains(error_of(base + R"({"gen": 0, "injection": [1, 2]}]}]})"), "relations[0].terms[0].injection"));
  CHECK(contains(error_of(base + R"({"gen": 0, "injection": [3]}]}]})"), "relations[0].terms[0]"));
  CHECK(contains(error_of(base + R"({"gen": 0, "injection": [1], "coeff": "1/0"}]}]})"), "relations[0].terms[0].coeff"));
  CHECK(contains(error_of(base + R"({"gen": 0, "injection": [1], "coeff": 1.5}]}]})"), "coeff"));
  CHECK_THROWS_AS(read_presentation_file("/nonexistent/module.json"), ParseError);
}

TEST_CASE("reports") {
  const PrimeField f(101);
  const auto r = invariant_report(compile(f, fixtures::k0(), 4), 2);
  const auto j = to_json(r);
  CHECK(j["gd"]["value"] == 0);
  CHECK(j["td"]["value"] == 0);
  CHECK(j["hd1"]["value"] == 1);
  CHECK(j["certified"] == true);
  const auto free = to_json(invariant_report(compile(f, fixtures::free_on(2), 4), 2));
  CHECK(free["td"]["value"] == "-inf");
  CHECK(free["hd1"]["value"] == "-inf");
  CHECK(dims_csv({1, 0}, {{1, 0}, {0, 1}}) == "degree,dim,H0,H1\n0,1,1,0\n1,0,0,1\n");
  const auto g = fit_polynomial(compile(f, fixtures::free_on(1), 3));
  CHECK(to_json(g)["poly"] == "X");
  CHECK(growth_csv({0, 1, 2, 3}, g) == "degree,dim,poly\n0,0,\n1,1,1\n2,2,2\n3,3,3\n");
}
