#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "fihom/category.hpp"

using namespace fihom;

namespace {

FiGMorphism make(int m, int n, std::vector<int> inj, std::vector<int> colors) {
  return FiGMorphism{m, n, std::move(inj), std::move(colors)};
}

std::int64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Chain ι_{n-1} ∘ ... ∘ ι_m built by composition.
FiGMorphism inclusion_chain(const FiniteGroup& g, int m, int n) {
  FiGMorphism c = FiGMorphism::identity(m);
  for (int k = m; k < n; ++k) c = compose(g, FiGMorphism::standard_inclusion(k), c);
  return c;
}

FiGMorphism evaluate_word(const FiniteGroup& g, int n, const Word& w) {
  FiGMorphism r = FiGMorphism::identity(n);
  for (int k : w) r = compose(g, generator_morphism(n, k, g.order()), r);
  return r;
}

}  // namespace

TEST_CASE("groups") {
  const auto c2 = FiniteGroup::cyclic(2);
  CHECK(c2.order() == 2);
  CHECK(c2.inverse(1) == 1);
  CHECK_THROWS_AS(FiniteGroup({{0, 1}, {0, 1}}), ContractViolation);
  CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1, 1}}), ContractViolation);
  // S_3 as a Cayley table is accepted (non-abelian).
  const std::vector<std::vector<int>> perms = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::vector<int> ab(3);
      for (int i = 0; i < 3; ++i) ab[i] = perms[a][perms[b][i]];
      table[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), ab) - perms.begin());
    }
  CHECK(FiniteGroup(table).order() == 6);
}

TEST_CASE("hom_set examples") {
  const auto triv = FiniteGroup::trivial();
  const auto c2 = FiniteGroup::cyclic(2);
  CHECK(hom_set(0, 5, triv).size() == 1);
  CHECK(hom_set(1, 3, triv).size() == 3);
  CHECK(hom_set(2, 4, c2).size() == 48);
  CHECK(hom_set(3, 2, triv).empty());
}

TEST_CASE("hom_set sizes, order and ranks are consistent") {
  for (int q = 1; q <= 2; ++q) {
    const auto g = FiniteGroup::cyclic(q);
    for (int n = 0; n <= 6; ++n)
      for (int m = 0; m <= n; ++m) {
        const auto hs = hom_set(m, n, g);
        const std::int64_t gn = factorial(n) * static_cast<std::int64_t>(std::pow(q, n));
        const std::int64_t gnm = factorial(n - m) * static_cast<std::int64_t>(std::pow(q, n - m));
        REQUIRE(static_cast<std::int64_t>(hs.size()) == binomial(n, m) * factorial(m) * static_cast<std::int64_t>(std::pow(q, m)));
        CHECK(static_cast<std::int64_t>(hs.size()) == gn / gnm);
        CHECK(std::is_sorted(hs.begin(), hs.end(), [](const auto& a, const auto& b) {
          return std::tie(a.injection, a.colors) < std::tie(b.injection, b.colors);
        }));
        CHECK(std::adjacent_find(hs.begin(), hs.end()) == hs.end());
        for (std::size_t r = 0; r < hs.size(); ++r) {
          check_morphism(hs[r], g);
          CHECK(hom_rank(hs[r], q) == static_cast<std::int64_t>(r));
        }
      }
  }
}

TEST_CASE("composition") {
  const auto triv = FiniteGroup::trivial();
  SUBCASE("hand example") {
    const auto beta = make(2, 3, {2, 3}, {0, 0});
    const auto alpha = make(1, 2, {2}, {0});
    CHECK(compose(triv, beta, alpha) == make(1, 3, {3}, {0}));
  }
  SUBCASE("mismatched degrees") {
    CHECK_THROWS_AS(compose(triv, FiGMorphism::identity(2), FiGMorphism::identity(1)), ContractViolation);
  }
  for (int q = 1; q <= 2; ++q) {
    const auto g = FiniteGroup::cyclic(q);
    for (int m = 0; m <= 3; ++m)
      for (int n = m; n <= 3; ++n)
        for (const auto& a : hom_set(m, n, g)) {
          CHECK(compose(g, FiGMorphism::identity(n), a) == a);
          CHECK(compose(g, a, FiGMorphism::identity(m)) == a);
          for (int p = n; p <= 3; ++p)
            for (const auto& b : hom_set(n, p, g))
              for (int r = p; r <= 3; ++r)
                for (const auto& c : hom_set(p, r, g))
                  REQUIRE(compose(g, c, compose(g, b, a)) == compose(g, compose(g, c, b), a));
        }
  }
}

TEST_CASE("color convention") {
  const auto c3 = FiniteGroup::cyclic(3);
  const auto beta = make(2, 2, {2, 1}, {1, 2});
  const auto alpha = make(1, 2, {1}, {1});
  // h(1) = beta.colors[alpha(1)] · alpha.colors[1] = 1 + 1
  CHECK(compose(c3, beta, alpha) == make(1, 2, {2}, {2}));
}

TEST_CASE("canonical_factor") {
  const auto triv = FiniteGroup::trivial();
  CHECK(canonical_factor(triv, FiGMorphism::identity(3)) == FiGMorphism::identity(3));
  CHECK(canonical_factor(triv, make(1, 2, {2}, {0})) == make(2, 2, {2, 1}, {0, 0}));
  for (int q = 1; q <= 2; ++q) {
    const auto g = FiniteGroup::cyclic(q);
    for (int n = 0; n <= 4; ++n)
      for (int m = 0; m <= n; ++m)
        for (const auto& a : hom_set(m, n, g)) {
          const auto tau = canonical_factor(g, a);
          REQUIRE(tau.is_invertible());
          CHECK(compose(g, tau, inclusion_chain(g, m, n)) == a);
        }
  }
}

TEST_CASE("G_{n+1} acts transitively on C(n, n+1)") {
  for (int q = 1; q <= 2; ++q) {
    const auto g = FiniteGroup::cyclic(q);
    for (int n = 0; n <= 3; ++n) {
      const auto alpha = FiGMorphism::standard_inclusion(n);
      std::set<FiGMorphism> reached;
      for (const auto& tau : hom_set(n + 1, n + 1, g)) reached.insert(compose(g, tau, alpha));
      CHECK(reached.size() == hom_set(n, n + 1, g).size());
    }
  }
}

TEST_CASE("words in the generators reproduce every group element") {
  for (int q = 1; q <= 3; ++q) {
    const auto g = FiniteGroup::cyclic(q);
    for (int n = 0; n <= 4; ++n)
      for (const auto& tau : hom_set(n, n, g)) REQUIRE(evaluate_word(g, n, wreath_word(g, tau)) == tau);
    for (int n = 1; n <= 4; ++n)
      for (int j = 1; j <= n; ++j)
        for (int c = 0; c < q; ++c) {
          auto expect = FiGMorphism::identity(n);
          expect.colors[j - 1] = c;
          CHECK(evaluate_word(g, n, color_word(n, j, c)) == expect);
        }
  }
}

TEST_CASE("subsets") {
  const auto s = subsets(5, 2);
  CHECK(s.size() == 10);
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(subset_rank(s[i], 5) == static_cast<std::int64_t>(i));
  CHECK(subsets(3, 0).size() == 1);
  CHECK(subsets(2, 3).empty());
}
