#pragma once

// Small hand-written presentations shared by the unit tests.

#include "fihom/presentation.hpp"

namespace fixtures {

using namespace fihom;

inline FiGMorphism morph(int m, int n, std::vector<int> inj, std::vector<int> colors = {}) {
  if (colors.empty()) colors.assign(m, 0);
  return FiGMorphism{m, n, std::move(inj), std::move(colors)};
}

/// k in degree 0: one generator killed by the unique map 0 -> 1.
inline Presentation k0(FieldSpec field = FieldSpec::prime(101), FiniteGroup g = FiniteGroup::trivial(), int window = 6) {
  return Presentation{field, std::move(g), {0}, {Relation{1, {{0, morph(0, 1, {}), "1"}}}}, window};
}

/// M(m) = C(m, -).
inline Presentation free_on(int m, FieldSpec field = FieldSpec::prime(101), FiniteGroup g = FiniteGroup::trivial(), int window = 6) {
  return Presentation{field, std::move(g), {m}, {}, window};
}

/// M(0) ⊕ k₀.
inline Presentation free0_plus_k0(FieldSpec field = FieldSpec::prime(101), int window = 6) {
  return Presentation{field, FiniteGroup::trivial(), {0, 0}, {Relation{1, {{1, morph(0, 1, {}), "1"}}}}, window};
}

/// M(1) with the two images of its generator in degree 2 identified.
inline Presentation symmetrized(FieldSpec field = FieldSpec::prime(101), FiniteGroup g = FiniteGroup::trivial(), int window = 6) {
  Relation r{2, {{0, morph(1, 2, {1}), "1"}, {0, morph(1, 2, {2}), "-1"}}};
  return Presentation{field, std::move(g), {1}, {r}, window};
}

/// Generators in degrees 0 and 1 with a relation tying the image of the
/// first to the second in degree 1, and one killing a colored element in 2.
inline Presentation mixed(FieldSpec field = FieldSpec::prime(101), int window = 6) {
  const auto g = FiniteGroup::cyclic(2);
  Relation a{1, {{0, morph(0, 1, {}), "1"}, {1, morph(1, 1, {1}, {1}), "2"}}};
  Relation b{2, {{1, morph(1, 2, {2}, {1}), "1"}, {1, morph(1, 2, {1}, {0}), "1"}}};
  return Presentation{field, g, {0, 1}, {a, b}, window};
}

}  // namespace fixtures
