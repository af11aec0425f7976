#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fihom/module.hpp"

using namespace fihom;

namespace {

Presentation presentation(FieldSpec field, FiniteGroup g, std::vector<int> gens, std::vector<Relation> rels, int window) {
  return Presentation{field, std::move(g), std::move(gens), std::move(rels), window};
}

FiGMorphism morph(int m, int n, std::vector<int> inj) {
  return FiGMorphism{m, n, std::move(inj), std::vector<int>(m, 0)};
}

// Trivial module k in degree 0 only: one generator, killed by ι_0.
Presentation k0() {
  return presentation(FieldSpec::prime(101), FiniteGroup::trivial(), {0}, {Relation{1, {{0, morph(0, 1, {}), "1"}}}}, 5);
}

}  // namespace

TEST_CASE("free module dimensions") {
  const PrimeField f(101);
  const auto triv = FiniteGroup::trivial();
  const auto m0 = free_module(f, triv, {0}, 4).module;
  CHECK(m0.dims == std::vector<int>{1, 1, 1, 1, 1});
  const auto m1 = free_module(f, triv, {1}, 4).module;
  CHECK(m1.dims == std::vector<int>{0, 1, 2, 3, 4});
  const auto m1c = free_module(f, FiniteGroup::cyclic(2), {1}, 4).module;
  CHECK(m1c.dims == std::vector<int>{0, 2, 4, 6, 8});
  const auto m2 = free_module(f, triv, {2}, 4).module;
  CHECK(m2.dims == std::vector<int>{0, 0, 2, 6, 12});
  for (const auto* m : {&m0, &m1, &m1c, &m2}) CHECK(validate(*m).empty());
  CHECK(m1.bounds == PresentationBounds{1, kNegInf});
  CHECK_THROWS_AS(free_module(f, triv, {5}, 4), WindowError);
}

TEST_CASE("compiled examples") {
  const PrimeField f(101);
  SUBCASE("k in degree 0") {
    const auto v = compile(f, k0(), 5);
    CHECK(v.dims == std::vector<int>{1, 0, 0, 0, 0, 0});
    CHECK(validate(v).empty());
    CHECK(v.top_degree() == 0);
  }
  SUBCASE("single generator in degree 1 is free") {
    auto p = presentation(FieldSpec::prime(101), FiniteGroup::trivial(), {1}, {}, 4);
    const auto v = compile(f, p, 4);
    CHECK(v.dims == free_module(f, p.group, {1}, 4).module.dims);
    CHECK(v.bounds == PresentationBounds{1, kNegInf});
  }
  SUBCASE("two degree-0 generators identified in degree 1") {
    auto p = presentation(FieldSpec::prime(101), FiniteGroup::trivial(), {0, 0},
                          {Relation{1, {{0, morph(0, 1, {}), "1"}, {1, morph(0, 1, {}), "-1"}}}}, 4);
    const auto v = compile(f, p, 4);
    CHECK(v.dims == std::vector<int>{2, 1, 1, 1, 1});
    CHECK(validate(v).empty());
  }
  SUBCASE("relations above the window are rejected") {
    auto p = k0();
    CHECK_THROWS_AS(compile(f, p, 0), WindowError);
  }
  SUBCASE("sign twist over C2") {
    // M(1) over C2 modulo c·x = -x: each point carries the sign character
    const auto c2 = FiniteGroup::cyclic(2);
    auto p = presentation(FieldSpec::prime(101), c2, {1},
                          {Relation{1, {{0, FiGMorphism{1, 1, {1}, {1}}, "1"}, {0, FiGMorphism::identity(1), "1"}}}}, 4);
    const auto v = compile(f, p, 4);
    CHECK(v.dims == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(validate(v).empty());
  }
}

TEST_CASE("morphisms act functorially") {
  const RationalField q;
  for (int order = 1; order <= 2; ++order) {
    const auto g = FiniteGroup::cyclic(order);
    const auto fm = free_module(q, g, {1}, 3);
    const auto& v = fm.module;
    for (int m = 1; m <= 3; ++m)
      for (int n = m; n <= 3; ++n)
        for (const auto& a : hom_set(m, n, g)) {
          // on M(1) the basis vector indexed by β goes to a ∘ β
          for (const auto& b : hom_set(1, m, g)) {
            const auto img = v.apply_morphism(a, v.unit(m, static_cast<int>(hom_rank(b, order))));
            CHECK(img == v.unit(n, static_cast<int>(hom_rank(compose(g, a, b), order))));
          }
          for (int p = n; p <= 3; ++p)
            for (const auto& c : hom_set(n, p, g)) {
              const auto lhs = v.morphism_matrix(compose(g, c, a));
              const auto rhs = multiply(q, v.morphism_matrix(c), v.morphism_matrix(a));
              CHECK(lhs == rhs);
            }
        }
  }
}

TEST_CASE("validate detects corrupted structure maps") {
  const PrimeField f(101);
  auto v = free_module(f, FiniteGroup::trivial(), {0, 1}, 3).module;
  REQUIRE(validate(v).empty());
  auto dense = v.structmaps[1].to_dense(f);
  // send the degree-1 basis of M(1) to the wrong element of M(1)_2
  dense(1, 1) = 0;
  dense(2, 1) = 1;
  v.structmaps[1] = SparseOf<PrimeField>::from_dense(f, dense);
  const auto issues = validate(v);
  CHECK_FALSE(issues.empty());
  auto w = free_module(f, FiniteGroup::trivial(), {2}, 3).module;
  w.actions[3][0] = SparseOf<PrimeField>::identity(f, w.dims[3]);
  w.actions[3][0] = detail::sparse_multiply(f, w.actions[3][1], w.actions[3][0]);
  CHECK_FALSE(validate(w).empty());
}

TEST_CASE("kernels, cokernels and sums") {
  const PrimeField f(101);
  const auto triv = FiniteGroup::trivial();
  const auto m0 = free_module(f, triv, {0}, 4).module;
  const auto sum = direct_sum(m0, m0);
  CHECK(sum.dims == std::vector<int>{2, 2, 2, 2, 2});
  CHECK(validate(sum).empty());
  // fold map M(0) ⊕ M(0) -> M(0)
  ModuleMap<PrimeField> fold;
  for (int n = 0; n <= 4; ++n) {
    MatrixOf<PrimeField> a(1, 2, 1);
    fold.mats.push_back(a);
  }
  CHECK(check_module_map(sum, m0, fold).empty());
  const auto k = map_kernel(sum, fold);
  CHECK(k.module.dims == std::vector<int>{1, 1, 1, 1, 1});
  CHECK(validate(k.module).empty());
  CHECK(check_module_map(k.module, sum, k.inclusion).empty());
  const auto c = map_cokernel(m0, fold);
  CHECK(c.module.is_zero());
  // identity on M(1) has zero kernel and cokernel
  const auto m1 = free_module(f, triv, {1}, 4).module;
  CHECK(map_kernel(m1, identity_map(m1)).module.is_zero());
  CHECK(map_cokernel(m1, identity_map(m1)).module.is_zero());
  // a non-equivariant map is reported
  ModuleMap<PrimeField> bad = identity_map(m1);
  bad.mats[2](0, 0) = 2;
  CHECK_FALSE(check_module_map(m1, m1, bad).empty());
}

TEST_CASE("quotient by JV recovers generators") {
  const PrimeField f(7);
  const auto v = free_module(f, FiniteGroup::cyclic(2), {0, 2}, 4).module;
  std::vector<int> h0;
  for (int n = 0; n <= 4; ++n) h0.push_back(v.dims[n] - augmentation_part(v, n).dim());
  // H0 is a G_n-module: the free summand contributes all of kG_2
  CHECK(h0 == std::vector<int>{1, 0, 8, 0, 0});
}
