#include "fihom/io.hpp"

#include <fstream>
#include <sstream>

namespace fihom {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) { throw ParseError(where + ": " + what); }

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing field '") + key + "'");
  return *it;
}

int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  const auto v = j.get<long long>();
  if (v < -(1LL << 30) || v > (1LL << 30)) bad(where, "integer out of range");
  return static_cast<int>(v);
}

std::vector<int> int_array(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace

Json degree_json(int d) { return is_neg_inf(d) ? Json("-inf") : Json(d); }

int degree_from_json(const Json& j, const std::string& where) {
  if (j.is_string() && j.get<std::string>() == "-inf") return kNegInf;
  return as_int(j, where);
}

Json value_json(const DegreeValue& v) { return Json{{"value", degree_json(v.value)}, {"certified", v.certified}}; }

Json field_json(const FieldSpec& f) {
  if (f.kind == FieldSpec::Kind::rational) return Json{{"kind", "rational"}};
  return Json{{"kind", "prime"}, {"characteristic", f.characteristic}};
}

FieldSpec field_from_json(const Json& j, const std::string& where) {
  auto prime = [&](long long p) {
    if (p < 2 || p > (1LL << 31)) bad(where, "characteristic out of range");
    try {
      return FieldSpec::prime(static_cast<std::uint32_t>(p));
    } catch (const ContractViolation&) {
      bad(where, std::to_string(p) + " is not prime");
    }
  };
  if (j.is_number_integer()) return prime(j.get<long long>());
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "Q" || s == "q" || s == "rational") return FieldSpec::rational();
    if (s.rfind("F_", 0) == 0) s = s.substr(2);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 10)
      bad(where, "unknown field '" + j.get<std::string>() + "'");
    return prime(std::stoll(s));
  }
  const auto& kind = member(j, "kind", where);
  if (!kind.is_string()) bad(where + ".kind", "expected a string");
  const auto k = kind.get<std::string>();
  if (k == "rational") return FieldSpec::rational();
  if (k != "prime") bad(where + ".kind", "expected 'prime' or 'rational'");
  const auto& c = member(j, "characteristic", where);
  if (!c.is_number_integer()) bad(where + ".characteristic", "expected an integer");
  return prime(c.get<long long>());
}

Json to_json(const Presentation& p) {
  Json rels = Json::array();
  for (const auto& r : p.relations) {
    Json terms = Json::array();
    for (const auto& t : r.terms)
      terms.push_back(Json{{"gen", t.gen}, {"injection", t.alpha.injection}, {"colors", t.alpha.colors}, {"coeff", t.coeff}});
    rels.push_back(Json{{"degree", r.degree}, {"terms", terms}});
  }
  return Json{{"field", field_json(p.field)},
              {"group", Json{{"order", p.group.order()}, {"table", p.group.table()}}},
              {"generators", p.generators},
              {"relations", rels},
              {"window", p.window}};
}

Presentation presentation_from_json(const Json& j) {
  if (!j.is_object()) bad("presentation", "expected an object");
  // counterexamples from a fuzz report wrap the presentation
  if (!j.contains("field") && j.contains("presentation")) return presentation_from_json(j["presentation"]);
  Presentation p;
  p.field = field_from_json(member(j, "field", "presentation"), "field");

  const auto& g = member(j, "group", "presentation");
  const int order = as_int(member(g, "order", "group"), "group.order");
  if (order < 1) bad("group.order", "must be positive");
  if (g.contains("table")) {
    const auto& t = g["table"];
    if (!t.is_array() || static_cast<int>(t.size()) != order) bad("group.table", "expected " + std::to_string(order) + " rows");
    std::vector<std::vector<int>> table;
    for (int i = 0; i < order; ++i) {
      table.push_back(int_array(t[i], "group.table[" + std::to_string(i) + "]"));
      if (static_cast<int>(table.back().size()) != order) bad("group.table[" + std::to_string(i) + "]", "wrong row length");
    }
    try {
      p.group = FiniteGroup(table);
    } catch (const ContractViolation& e) {
      bad("group.table", e.what());
    }
  } else {
    p.group = FiniteGroup::cyclic(order);
  }

  p.generators = int_array(member(j, "generators", "presentation"), "generators");
  for (std::size_t i = 0; i < p.generators.size(); ++i)
    if (p.generators[i] < 0) bad("generators[" + std::to_string(i) + "]", "negative degree");

  const auto& rels = member(j, "relations", "presentation");
  if (!rels.is_array()) bad("relations", "expected an array");
  for (std::size_t k = 0; k < rels.size(); ++k) {
    const std::string where = "relations[" + std::to_string(k) + "]";
    Relation r;
    r.degree = as_int(member(rels[k], "degree", where), where + ".degree");
    const auto& terms = member(rels[k], "terms", where);
    if (!terms.is_array()) bad(where + ".terms", "expected an array");
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const std::string tw = where + ".terms[" + std::to_string(i) + "]";
      RelationTerm t;
      t.gen = as_int(member(terms[i], "gen", tw), tw + ".gen");
      if (t.gen < 0 || t.gen >= static_cast<int>(p.generators.size())) bad(tw + ".gen", "no generator " + std::to_string(t.gen));
      t.alpha.source = p.generators[t.gen];
      t.alpha.target = r.degree;
      t.alpha.injection = int_array(member(terms[i], "injection", tw), tw + ".injection");
      if (terms[i].contains("colors"))
        t.alpha.colors = int_array(terms[i]["colors"], tw + ".colors");
      else
        t.alpha.colors.assign(t.alpha.injection.size(), 0);
      if (static_cast<int>(t.alpha.injection.size()) != t.alpha.source)
        bad(tw + ".injection", "expected " + std::to_string(t.alpha.source) + " entries");
      try {
        check_morphism(t.alpha, p.group);
      } catch (const ContractViolation& e) {
        bad(tw, e.what());
      }
      if (terms[i].contains("coeff")) {
        const auto& c = terms[i]["coeff"];
        if (c.is_number_integer())
          t.coeff = std::to_string(c.get<long long>());
        else if (c.is_string())
          t.coeff = c.get<std::string>();
        else
          bad(tw + ".coeff", "expected an integer or a string like \"-3/2\"");
        try {
          with_field(p.field, [&](const auto& f) { (void)f.parse(t.coeff); });
        } catch (const std::exception& e) {
          bad(tw + ".coeff", e.what());
        }
      }
      r.terms.push_back(std::move(t));
    }
    p.relations.push_back(std::move(r));
  }
  p.window = j.contains("window") ? as_int(j["window"], "window") : 0;
  if (p.window < 0) bad("window", "negative window");
  try {
    p.check();
  } catch (const ContractViolation& e) {
    bad("presentation", e.what());
  }
  return p;
}

Presentation parse_presentation(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // byte offset -> line and column
    const std::size_t at = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": malformed JSON");
  }
  return presentation_from_json(j);
}

Presentation read_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_presentation(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const InvariantReport& r) {
  Json hd = Json::array();
  bool all = r.gd.certified && r.td.certified;
  for (std::size_t s = 0; s < r.hd.size(); ++s) {
    hd.push_back(Json{{"s", s}, {"value", degree_json(r.hd[s].value)}, {"certified", r.hd[s].certified}});
    all = all && r.hd[s].certified;
  }
  Json out{{"window", r.window}};
  out["bounds"] = r.bounds ? Json{{"gen", degree_json(r.bounds->gen)}, {"rel", degree_json(r.bounds->rel)}} : Json(nullptr);
  out["dims"] = r.dims;
  out["gd"] = value_json(r.gd);
  out["td"] = value_json(r.td);
  out["hd1"] = r.hd.size() > 1 ? value_json(r.hd[1]) : Json(nullptr);
  out["hd"] = hd;
  out["tor"] = r.tor;
  out["projective_dimension"] = r.projective_dimension ? Json(*r.projective_dimension) : Json(nullptr);
  out["certified"] = all;
  return out;
}

Json to_json(const GrowthReport& g) {
  Json coeffs = Json::array();
  for (const auto& c : g.poly.coefficients) coeffs.push_back(c.get_str());
  return Json{{"stable_from", g.stable_from},
              {"poly", g.poly.to_string()},
              {"coefficients", coeffs},
              {"degree", degree_json(g.poly.degree())},
              {"verified_range", Json::array({g.verified_from, g.verified_to})},
              {"observed_from", g.observed_from},
              {"relation_bound", degree_json(g.relation_bound)},
              {"gd", value_json(g.gd)},
              {"td", value_json(g.td)}};
}

std::string dims_csv(const std::vector<int>& dims, const std::vector<std::vector<int>>& tor) {
  std::string out = "degree,dim";
  for (std::size_t s = 0; s < tor.size(); ++s) out += ",H" + std::to_string(s);
  out += "\n";
  for (std::size_t n = 0; n < dims.size(); ++n) {
    out += std::to_string(n) + "," + std::to_string(dims[n]);
    for (const auto& row : tor) out += "," + (n < row.size() ? std::to_string(row[n]) : std::string());
    out += "\n";
  }
  return out;
}

std::string growth_csv(const std::vector<int>& dims, const GrowthReport& g) {
  std::string out = "degree,dim,poly\n";
  for (std::size_t n = 0; n < dims.size(); ++n) {
    const int d = static_cast<int>(n);
    out += std::to_string(n) + "," + std::to_string(dims[n]) + "," +
           (d >= g.stable_from ? g.poly(mpq_class(d)).get_str() : std::string()) + "\n";
  }
  return out;
}

}  // namespace fihom
