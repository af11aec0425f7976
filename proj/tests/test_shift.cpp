#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fihom/shift.hpp"
#include "fixtures.hpp"

using namespace fihom;
using fixtures::free_on;
using fixtures::k0;

namespace {

const PrimeField f101(101);

std::vector<DegreewiseModule<PrimeField>> corpus() {
  std::vector<DegreewiseModule<PrimeField>> out;
  const auto c2 = FiniteGroup::cyclic(2);
  for (const auto& p : {k0(), free_on(0), free_on(1), free_on(2, FieldSpec::prime(101), FiniteGroup::trivial(), 5),
                        free_on(1, FieldSpec::prime(101), c2), fixtures::free0_plus_k0(), fixtures::symmetrized(),
                        fixtures::symmetrized(FieldSpec::prime(101), c2), fixtures::mixed()})
    out.push_back(compile(f101, p, p.window));
  return out;
}

bool same_data(const DegreewiseModule<PrimeField>& a, const DegreewiseModule<PrimeField>& b) {
  if (a.window != b.window || a.dims != b.dims) return false;
  for (int n = 0; n <= a.window; ++n) {
    for (std::size_t k = 0; k < a.actions[n].size(); ++k)
      if (!detail::sparse_equal(f101, a.actions[n][k], b.actions[n][k])) return false;
    if (n < a.window && !detail::sparse_equal(f101, a.structmaps[n], b.structmaps[n])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("shift examples") {
  const auto m0 = compile(f101, free_on(0), 6);
  const auto s0 = shift(m0);
  CHECK(s0.window == 5);
  CHECK(same_data(s0, truncate(m0, 5)));
  const auto s1 = shift(compile(f101, free_on(1), 6));
  for (int n = 0; n <= 5; ++n) CHECK(s1.dims[n] == n + 1);
  CHECK(shift(compile(f101, k0(), 6)).is_zero());
  CHECK_THROWS_AS(shift(m0, 7), WindowError);
}

TEST_CASE("shifted modules are modules and shifts compose") {
  for (const auto& v : corpus()) {
    for (int a = 1; a <= 3; ++a) CHECK(validate(shift(v, a)).empty());
    CHECK(same_data(shift(shift(v, 1), 2), shift(v, 3)));
    CHECK(same_data(shift(shift(v, 2), 1), shift(v, 3)));
  }
}

TEST_CASE("natural map") {
  const auto m0 = compile(f101, free_on(0), 6);
  for (const auto& m : natural_map(m0).mats) CHECK(m == MatrixOf<PrimeField>::identity(f101, 1));
  const auto kk = compile(f101, k0(), 6);
  for (const auto& m : natural_map(kk).mats) CHECK(is_zero_matrix(f101, m));
  const auto m1 = compile(f101, free_on(1), 6);
  const auto nat = natural_map(m1);
  for (int n = 0; n < 6; ++n) CHECK(rank(f101, nat.mats[n]) == n);
  for (const auto& v : corpus()) CHECK(check_module_map(truncate(v, v.window - 1), shift(v), natural_map(v)).empty());
}

TEST_CASE("derivative") {
  CHECK(derivative(compile(f101, free_on(0), 6)).is_zero());
  CHECK(derivative(compile(f101, free_on(1), 6)).dims == std::vector<int>(6, 1));
  CHECK(derivative(compile(f101, k0(), 6)).is_zero());
  for (const auto& v : corpus()) CHECK(validate(derivative(v)).empty());
}

TEST_CASE("torsion kernel and degree") {
  const auto kk = compile(f101, k0(), 6);
  CHECK(torsion_kernel(kk).module.dims == std::vector<int>{1, 0, 0, 0, 0, 0});
  for (int m = 0; m <= 2; ++m) CHECK(torsion_kernel(compile(f101, free_on(m), 6)).module.is_zero());
  const auto sum = compile(f101, fixtures::free0_plus_k0(), 6);
  CHECK(torsion_kernel(sum).module.dims == std::vector<int>{1, 0, 0, 0, 0, 0});
  CHECK(torsion_degree(kk) == DegreeValue{0, true});
  CHECK(torsion_degree(compile(f101, free_on(2), 6)) == DegreeValue{kNegInf, true});
  // certification needs the window to reach gen + rel
  CHECK_FALSE(torsion_degree(compile(f101, fixtures::symmetrized(), 2)).certified);
  CHECK(torsion_degree(compile(f101, fixtures::symmetrized(), 3)).certified);
}

TEST_CASE("K equals the kernel of the natural map") {
  for (const auto& v : corpus()) {
    const auto nat = natural_map(v);
    const auto k = torsion_kernel(v);
    for (int n = 0; n < v.window; ++n) {
      CHECK(k.module.dims[n] == v.dims[n] - rank(f101, nat.mats[n]));
      CHECK(is_zero_matrix(f101, multiply(f101, nat.mats[n], k.inclusion.mats[n])));
    }
  }
}

TEST_CASE("four-term sequence is exact") {
  for (const auto& v : corpus()) {
    const auto k = torsion_kernel(v).module;
    const auto s = shift(v);
    const auto d = derivative(v);
    for (int n = 0; n < v.window; ++n) CHECK(k.dims[n] - v.dims[n] + s.dims[n] - d.dims[n] == 0);
  }
}

TEST_CASE("torsion split") {
  auto split = torsion_split(compile(f101, k0(), 6));
  CHECK(split.certified);
  CHECK(split.VT.dims == std::vector<int>{1, 0, 0, 0, 0, 0, 0});
  CHECK(split.VF.is_zero());
  split = torsion_split(compile(f101, free_on(1), 6));
  CHECK(split.VT.is_zero());
  CHECK(split.VF.dims == compile(f101, free_on(1), 6).dims);
  split = torsion_split(compile(f101, fixtures::free0_plus_k0(), 6));
  CHECK(split.VT.dims == std::vector<int>{1, 0, 0, 0, 0, 0, 0});
  CHECK(split.VF.dims == std::vector<int>(7, 1));
  for (const auto& v : corpus()) {
    const auto sp = torsion_split(v);
    CHECK(validate(sp.VT).empty());
    CHECK(validate(sp.VF).empty());
    CHECK(check_module_map(sp.VT, v, sp.inclusion).empty());
    CHECK(check_module_map(v, sp.VF, sp.projection).empty());
    CHECK(is_neg_inf(torsion_degree(sp.VF).value));
    for (int n = 0; n <= v.window; ++n) CHECK(sp.VT.dims[n] + sp.VF.dims[n] == v.dims[n]);
  }
}
