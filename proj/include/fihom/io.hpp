#pragma once

// JSON for presentations and reports, CSV projections of Hilbert functions.
// Keys are emitted in a fixed order so equal inputs give equal bytes.

#include <json.hpp>

#include <string>

#include "fihom/filtered.hpp"

namespace fihom {

using Json = nlohmann::ordered_json;

/// −∞ is the string "-inf".
Json degree_json(int d);
int degree_from_json(const Json& j, const std::string& where);
Json value_json(const DegreeValue& v);

Json field_json(const FieldSpec& f);
/// Accepts {"kind": "prime", "characteristic": p}, {"kind": "rational"}, or
/// the shorthands "Q", "F_p", "p".
FieldSpec field_from_json(const Json& j, const std::string& where = "field");

Json to_json(const Presentation& p);
/// Throws ParseError naming the offending field; the result passes check().
/// A fuzz counterexample {seed, trial, detail, presentation} is also accepted.
Presentation presentation_from_json(const Json& j);
/// Parses text; syntax errors report line and column.
Presentation parse_presentation(const std::string& text);
Presentation read_presentation_file(const std::string& path);
std::string dump(const Json& j);

Json to_json(const InvariantReport& r);
Json to_json(const GrowthReport& g);

template <class F>
Json representation_summary(const Representation<F>& r) {
  return Json{{"degree", r.degree}, {"dim", r.dim}};
}

template <class F>
Json to_json(const FilteredComplex<F>& c) {
  Json terms = Json::array();
  for (std::size_t k = 0; k < c.terms.size(); ++k) {
    Json layers = Json::array();
    for (const auto& l : c.filtrations[k]) layers.push_back(representation_summary(l));
    terms.push_back(Json{{"index", -static_cast<int>(k) - 1},
                         {"shift", c.shifts[k]},
                         {"window", c.terms[k].window},
                         {"dims", c.terms[k].dims},
                         {"filtration", layers}});
  }
  Json hs = Json::array();
  for (const auto& h : c.homologies)
    hs.push_back(Json{{"index", h.index}, {"td", value_json(h.td)}, {"dims", h.module.dims}});
  Json gds = Json::array(), tds = Json::array();
  for (const auto& g : c.stage_gd) gds.push_back(value_json(g));
  for (const auto& t : c.stage_td) tds.push_back(value_json(t));
  return Json{{"length", c.length()},   {"window", c.V.window}, {"terms", terms},
              {"homologies", hs},       {"stage_gd", gds},      {"stage_td", tds},
              {"derived_regularity", value_json(c.derived_regularity)}};
}

/// degree,dim[,H0,H1,...] rows.
std::string dims_csv(const std::vector<int>& dims, const std::vector<std::vector<int>>& tor = {});
std::string growth_csv(const std::vector<int>& dims, const GrowthReport& g);

}  // namespace fihom
