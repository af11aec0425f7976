#pragma once

#include <string>
#include <vector>

#include "fihom/category.hpp"
#include "fihom/degree.hpp"
#include "fihom/field.hpp"

namespace fihom {

/// One summand coeff · (gen, alpha) of a relation, alpha ∈ C(d_gen, degree).
struct RelationTerm {
  int gen = 0;
  FiGMorphism alpha;
  std::string coeff = "1";
  bool operator==(const RelationTerm&) const = default;
};

struct Relation {
  int degree = 0;
  std::vector<RelationTerm> terms;
  bool operator==(const Relation&) const = default;
};

/// Generators in given degrees modulo the submodule generated by relations.
/// This is the exact description; compiled modules are truncations of it.
struct Presentation {
  FieldSpec field;
  FiniteGroup group;
  std::vector<int> generators;
  std::vector<Relation> relations;
  int window = 0;

  bool operator==(const Presentation&) const = default;

  PresentationBounds bounds() const;
  int max_generator_degree() const;
  int max_relation_degree() const;
  /// Structural checks (degrees, morphism data, coefficient syntax).
  void check() const;
};

}  // namespace fihom
