#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fihom/filtered.hpp"
#include "fixtures.hpp"

using namespace fihom;
using fixtures::free_on;
using fixtures::k0;

namespace {

const PrimeField f101(101);
const RationalField qq;

template <class F>
void check_complex(const DegreewiseModule<F>& v) {
  const auto c = filtered_complex(v);
  CHECK(complex_issues(c).empty());
  const int gd = c.stage_gd.front().value;
  const int td = c.stage_td.front().value;
  CHECK(c.length() - 1 <= gd);
  CHECK(c.homologies.front().td.value == td);
  for (std::size_t k = 1; k < c.homologies.size(); ++k) {
    const int i = c.homologies[k].index;
    CHECK(dle(c.homologies[k].td.value, 2 * gd + 2 * i + 2));
  }
  for (std::size_t k = 0; k < c.stage_gd.size(); ++k) CHECK(dle(c.stage_gd[k].value, gd - static_cast<int>(k)));
  for (const auto& t : c.terms) CHECK(validate(t).empty());
  CHECK(dle(c.derived_regularity.value, dmax(td, 2 * gd - 2)));
}

}  // namespace

TEST_CASE("interpolation") {
  const auto p = interpolate({3, 4, 5}, {6, 12, 20});
  CHECK(p.to_string() == "X^2 - X");
  CHECK(interpolate({0}, {1}).to_string() == "1");
  CHECK(interpolate({1}, {0}).to_string() == "0");
  CHECK(interpolate({}, {}).to_string() == "0");
  // binom(X, 2) has half-integer coefficients
  CHECK(interpolate({2, 3, 4}, {1, 3, 6}).to_string() == "(1/2)X^2 - (1/2)X");
  CHECK(interpolate({0, 1}, {-2, 1}).to_string() == "3X - 2");
  for (int n = -3; n <= 10; ++n) CHECK(p(mpq_class(n)) == n * n - n);
}

TEST_CASE("growth examples") {
  auto growth = [](const Presentation& p, int window) { return fit_polynomial(compile(f101, p, window)); };
  CHECK(growth(free_on(0), 4).poly.to_string() == "1");
  CHECK(growth(free_on(1), 4).poly.to_string() == "X");
  const auto m2 = growth(free_on(2), 7);
  CHECK(m2.poly.to_string() == "X^2 - X");
  CHECK(m2.stable_from == 3);
  const auto mk = growth(fixtures::free0_plus_k0(), 4);
  CHECK(mk.poly.to_string() == "1");
  CHECK(mk.stable_from == 1);
  CHECK(mk.observed_from == 1);
  CHECK(mk.relation_bound == 1);
  CHECK(m2.observed_from == 0);
  CHECK(is_neg_inf(m2.relation_bound));
  const auto kk = growth(k0(), 4);
  CHECK(kk.poly.to_string() == "0");
  CHECK(kk.stable_from == 1);
  CHECK(fit_polynomial(compile(qq, free_on(1, FieldSpec::rational(), FiniteGroup::cyclic(2)), 4)).poly.to_string() == "2X");
  CHECK_THROWS_AS(growth(free_on(2), 5), WindowError);
}

TEST_CASE("structural filtration test") {
  SUBCASE("free modules") {
    for (int m = 0; m <= 2; ++m) {
      const auto v = is_filtered(compile(f101, free_on(m, FieldSpec::prime(101), FiniteGroup::cyclic(2)), 4));
      CHECK(v.filtered);
      CHECK(v.certified);
      REQUIRE(v.layers.size() == 1);
      CHECK(v.layers[0].degree == m);
    }
    const auto sum = direct_sum(compile(f101, free_on(0), 4), compile(f101, free_on(2), 4));
    const auto v = is_filtered(sum);
    CHECK(v.filtered);
    CHECK(v.layers.size() == 2);
  }
  SUBCASE("k0 fails at the first step") {
    const auto v = is_filtered(compile(f101, k0(), 4));
    CHECK_FALSE(v.filtered);
    CHECK(v.layer_degree == 0);
    CHECK(v.failing_degree == 1);
    CHECK(v.expected == 1);
    CHECK(v.found == 0);
    CHECK_FALSE(is_filtered(compile(f101, fixtures::free0_plus_k0(), 4)).filtered);
  }
  SUBCASE("basic filtered modules") {
    const Representation<RationalField> sign{2, 1, {SparseOf<RationalField>::identity(qq, 1), SparseOf<RationalField>::identity(qq, 1)}};
    auto s = sign;
    s.actions[0] = SparseOf<RationalField>::from_columns(1, {{{0, Rational(-1)}}});
    const auto b = basic_filtered(qq, FiniteGroup::trivial(), s, 5);
    for (int m = 0; m <= 5; ++m) CHECK(b.dims[m] == binomial(m, 2));
    CHECK(validate(b).empty());
    const auto v = is_filtered(b);
    CHECK(v.filtered);
    REQUIRE(v.layers.size() == 1);
    CHECK(v.layers[0].dim == 1);
  }
  SUBCASE("shifts past the stable range are filtered") {
    for (const auto& p : {fixtures::symmetrized(FieldSpec::prime(101), FiniteGroup::trivial(), 8), fixtures::mixed(FieldSpec::prime(101), 8),
                          fixtures::free0_plus_k0(FieldSpec::prime(101), 8)}) {
      const auto v = compile(f101, p, p.window);
      const int n = stage_shift(torsion_degree(v).value, generating_degree(v).value);
      const auto verdict = is_filtered(shift(v, n));
      CHECK(verdict.filtered);
      CHECK(verdict.certified);
    }
  }
}

TEST_CASE("complex of filtered modules") {
  SUBCASE("torsion input") {
    const auto c = filtered_complex(compile(f101, k0(), 4));
    CHECK(c.length() == 0);
    REQUIRE(c.homologies.size() == 1);
    CHECK(c.homologies[0].index == -1);
    CHECK(c.homologies[0].td.value == 0);
    CHECK(c.derived_regularity.value == 0);
  }
  SUBCASE("free input") {
    const auto c = filtered_complex(compile(f101, free_on(1), 4));
    CHECK(c.shifts.front() == 1);
    CHECK(c.length() == 2);
    for (const auto& h : c.homologies) CHECK(h.module.is_zero());
    CHECK(is_neg_inf(c.derived_regularity.value));
    check_complex(compile(f101, free_on(1), 4));
    check_complex(compile(f101, free_on(2), 7));
  }
  SUBCASE("mixed inputs") {
    check_complex(compile(f101, fixtures::symmetrized(), 7));
    check_complex(compile(f101, fixtures::mixed(), 8));
    check_complex(compile(f101, fixtures::free0_plus_k0(), 4));
    check_complex(compile(qq, fixtures::mixed(FieldSpec::rational()), 8));
  }
  SUBCASE("insufficient window") {
    const auto v = compile(f101, free_on(2), 6);
    int need = 0;
    try {
      filtered_complex(truncate(v, 3));
    } catch (const WindowError& e) {
      need = e.required();
    }
    CHECK(need > 3);
    CHECK(need <= complex_window_demand(*v.bounds));
  }
}
