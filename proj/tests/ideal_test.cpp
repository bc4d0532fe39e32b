#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <limits>

using namespace rrc;
using namespace rrc::test;

TEST_CASE("normalize keeps minimal points in staircase order") {
  CHECK(ideal({{0, 3}, {2, 0}, {2, 1}}).gens().size() == 2);
  CHECK(ideal({{0, 3}, {2, 0}, {2, 1}}) == MonomialIdeal::from_staircase({{0, 3}, {2, 0}}));
  CHECK(ideal({{0, 28}, {2, 26}, {4, 24}, {2, 26}}) ==
        MonomialIdeal::from_staircase({{0, 28}, {2, 26}, {4, 24}}));

  const Points i_s{{17, 0}, {0, 28}, {13, 10}, {2, 26}, {10, 14}, {4, 24}, {11, 12}, {6, 22}, {15, 5}, {8, 20}};
  const MonomialIdeal normalized(i_s);
  CHECK(normalized.size() == 10);
  CHECK(std::is_sorted(normalized.gens().begin(), normalized.gens().end()));
}

TEST_CASE("from_staircase rejects lists not in normal form") {
  CHECK_THROWS_AS(MonomialIdeal::from_staircase({{0, 3}, {0, 2}}), InvalidArgument);
  CHECK_THROWS_AS(MonomialIdeal::from_staircase({{0, 3}, {1, 3}}), InvalidArgument);
  CHECK_THROWS_AS(MonomialIdeal::from_staircase({{2, 0}, {0, 3}}), InvalidArgument);
}

TEST_CASE("contains") {
  const MonomialIdeal i = ideal({{0, 3}, {2, 0}});
  CHECK(contains(i, {1, 5}));
  CHECK_FALSE(contains(i, {1, 2}));
  CHECK_FALSE(contains(staircase_17_28().ideal(), {5, 24}));
  CHECK(contains(closure_17_28(), {5, 24}));
  CHECK_FALSE(contains(MonomialIdeal(), {0, 0}));
  CHECK(contains(MonomialIdeal::unit(), {0, 0}));
}

TEST_CASE("intersect") {
  // expected value from brute-force membership over [0,5]^2
  const MonomialIdeal i = ideal({{0, 3}, {2, 0}});
  const MonomialIdeal j = ideal({{0, 2}, {3, 0}});
  const Points expected = generators_from_box(5, [&](LatticePoint m) {
    return divisible_by_any({{0, 3}, {2, 0}}, m) && divisible_by_any({{0, 2}, {3, 0}}, m);
  });
  REQUIRE(expected == Points{{0, 3}, {2, 2}, {3, 0}});
  CHECK(intersect(i, j) == MonomialIdeal::from_staircase(expected));

  CHECK(intersect(i, i) == i);
  CHECK(intersect(i, MonomialIdeal()).is_zero());
  CHECK(intersect(i, MonomialIdeal::unit()) == i);

  const MonomialIdeal i_s = ideal({{0, 28}, {2, 26}, {4, 24}, {6, 22}, {8, 20}, {10, 14}, {11, 12}, {13, 10},
                                   {15, 5}, {17, 0}});
  const MonomialIdeal i_t = ideal({{0, 28}, {2, 26}, {5, 24}, {7, 22}, {8, 19}, {9, 17}, {10, 14}, {11, 12},
                                   {13, 10}, {15, 5}, {17, 0}});
  CHECK(intersect(i_s, i_t) == closure_17_28());
}

TEST_CASE("multiply and power") {
  CHECK(power(ideal({{0, 3}, {2, 0}}), 2) == ideal({{0, 6}, {2, 3}, {4, 0}}));
  const MonomialIdeal e1 = staircase_17_28().ideal();
  CHECK(power(e1, 1) == e1);
  CHECK_THROWS_AS(power(e1, 0), InvalidArgument);
  CHECK(multiply(e1, MonomialIdeal()).is_zero());
  CHECK(multiply(e1, MonomialIdeal::unit()) == e1);

  SUBCASE("fifth power of <x^7, x^5y^2, y^5>") {
    const Exponent c = 7, d = 5, u = 5, v = 2, l = 5;
    Points k_and_h;
    for (Exponent i = 0; i <= l; ++i) {
      k_and_h.push_back({i * u, (l - i) * d + i * v});
      k_and_h.push_back({i * u + (l - i) * c, i * v});
    }
    // independent route: every 5-fold sum of generators
    const Points gens{{0, 5}, {5, 2}, {7, 0}};
    Points sums;
    for (std::size_t p = 0; p < 3; ++p)
      for (std::size_t q = p; q < 3; ++q)
        for (std::size_t r = q; r < 3; ++r)
          for (std::size_t s = r; s < 3; ++s)
            for (std::size_t t = s; t < 3; ++t)
              sums.push_back(gens[p] + gens[q] + gens[r] + gens[s] + gens[t]);
    const MonomialIdeal fifth = power(ideal({{7, 0}, {5, 2}, {0, 5}}), 5);
    CHECK(fifth == MonomialIdeal(sums));
    CHECK(fifth.size() == 15);
    // the pure K and H chains miss mixed products such as (x^7)^3 (y^5)^2
    CHECK(is_subset(MonomialIdeal(k_and_h), fifth));
    CHECK(MonomialIdeal(k_and_h) != fifth);
    CHECK(contains(fifth, {21, 10}));
    CHECK_FALSE(contains(MonomialIdeal(k_and_h), {21, 10}));
  }
}

TEST_CASE("colon") {
  const Points expected = generators_from_box(4, [](LatticePoint m) {
    return divisible_by_any({{2, 0}, {0, 2}}, {m.a + 1, m.b});
  });
  REQUIRE(expected == Points{{0, 2}, {1, 0}});
  CHECK(colon(ideal({{2, 0}, {0, 2}}), ideal({{1, 0}})) == MonomialIdeal::from_staircase(expected));

  const MonomialIdeal e1 = staircase_17_28().ideal();
  CHECK(colon(e1, MonomialIdeal::unit()) == e1);
  CHECK_THROWS_AS(colon(e1, MonomialIdeal()), InvalidArgument);
  CHECK(colon(MonomialIdeal(), e1).is_zero());
  CHECK(colon(e1, e1).is_unit());

  const MonomialIdeal first_step = colon(power(e1, 2), e1);
  CHECK(is_subset(e1, first_step));
  CHECK(first_step != e1);
  CHECK(is_subset(first_step, closure_17_28()));
}

TEST_CASE("add is the sum of ideals") {
  const MonomialIdeal i = ideal({{0, 3}, {2, 0}});
  const MonomialIdeal j = ideal({{0, 2}, {3, 0}});
  CHECK(add(i, j) == ideal({{0, 2}, {2, 0}}));
  CHECK(add(i, MonomialIdeal()) == i);
  CHECK(add(MonomialIdeal(), MonomialIdeal()).is_zero());
  CHECK(add(ideal({{3, 1}}), ideal({{1, 4}})) == ideal({{1, 4}, {3, 1}}));
}

TEST_CASE("overflow is reported, never wrapped") {
  constexpr Exponent big = std::numeric_limits<Exponent>::max() - 1;
  const MonomialIdeal i = ideal({{big, 0}, {0, 1}});
  CHECK_THROWS_AS(multiply(i, i), OverflowError);
  CHECK_THROWS_AS(power(i, 3), OverflowError);
  CHECK_THROWS_AS(shift(i, {2, 0}), OverflowError);
}

TEST_CASE("primary staircase validation") {
  const PrimaryStaircase e1 = staircase_17_28();
  CHECK(e1.corner_x() == 17);
  CHECK(e1.corner_y() == 28);
  CHECK(e1.interior().size() == 4);
  CHECK(e1.interior().front() == LatticePoint{2, 26});
  CHECK_THROWS_AS(PrimaryStaircase{MonomialIdeal()}, InvalidArgument);
  CHECK_THROWS_AS(PrimaryStaircase(MonomialIdeal::unit()), InvalidArgument);
  CHECK_THROWS_AS(PrimaryStaircase(ideal({{0, 3}, {2, 1}})), InvalidArgument);
  CHECK_THROWS_AS(PrimaryStaircase(ideal({{1, 3}, {2, 0}})), InvalidArgument);
}

TEST_CASE("property: set operations agree with brute-force membership") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const MonomialIdeal i = random_ideal(rng, 8, 5);
    const MonomialIdeal j = random_ideal(rng, 8, 4);
    const Exponent side = 16;
    const Points gi(i.gens().begin(), i.gens().end());
    const Points gj(j.gens().begin(), j.gens().end());

    const MonomialIdeal cap = intersect(i, j);
    const MonomialIdeal quo = colon(i, j);
    const MonomialIdeal sum = add(i, j);
    for (Exponent a = 0; a <= side; ++a) {
      for (Exponent b = 0; b <= side; ++b) {
        const LatticePoint m{a, b};
        CHECK(contains(cap, m) == (divisible_by_any(gi, m) && divisible_by_any(gj, m)));
        CHECK(contains(sum, m) == (divisible_by_any(gi, m) || divisible_by_any(gj, m)));
        bool all = true;
        for (const auto& h : gj) all = all && divisible_by_any(gi, m + h);
        CHECK(contains(quo, m) == all);
      }
    }

    // intersect agrees with its definition, normalize of pairwise lcms
    Points lcms;
    for (const auto& g : gi)
      for (const auto& h : gj) lcms.push_back(join(g, h));
    CHECK(cap == MonomialIdeal(lcms));
  }
}

TEST_CASE("property: powers, normal form, and normalize invariance") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const MonomialIdeal i = random_ideal(rng, 6, 4);
    MonomialIdeal p = i;
    for (std::size_t l = 1; l <= 6; ++l) {
      CHECK(power(i, l + 1) == multiply(p, i));
      p = power(i, l + 1);
      auto g = p.gens();
      for (std::size_t k = 1; k < g.size(); ++k) CHECK((g[k - 1].a < g[k].a && g[k - 1].b > g[k].b));
    }

    Points pts;
    for (int k = 0; k < 12; ++k) pts.push_back({uniform(rng, 0, 9), uniform(rng, 0, 9)});
    const MonomialIdeal once(pts);
    std::shuffle(pts.begin(), pts.end(), rng);
    CHECK(MonomialIdeal(pts) == once);
    CHECK(MonomialIdeal(once.gens()) == once);
  }
}
