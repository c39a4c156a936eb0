#include <doctest.h>

#include <algorithm>
#include <random>

#include "rlcm/oracle.hpp"

using namespace rlcm;

namespace {

AdsSpec z_times_2() {
  return AdsSpec{1, MonoidSpec{MonoidKind::FreeAbelian, 1, {"2"}}, {IntMatrix::from_rows({{2}})}};
}

SemidirectElement el1(long g, long e) {
  return SemidirectElement{Vec{Int(g)}, MonoidElement::from_exponents({e})};
}

}  // namespace

TEST_CASE("ball enumeration counts") {
  AdsSpec s2 = z_times_2();
  Ball b0 = enumerate_ball(s2, 0, 1);
  CHECK(b0.elements.size() == 3);

  Ball b = enumerate_ball(s2, 2, 4);
  CHECK(b.elements.size() == 9 * 3);  // p in {1, 2, 4}, g in [-4, 4]

  CHECK_THROWS_AS(enumerate_ball(s2, 2, 4, 10), std::invalid_argument);
}

TEST_CASE("ideal points") {
  AdsSpec s2 = z_times_2();
  Ball b = enumerate_ball(s2, 2, 4);

  auto all = oracle_ideal_points(s2, identity_s(s2), b);
  CHECK(all.size() == b.elements.size());

  auto pts = oracle_ideal_points(s2, el1(0, 1), b);
  // (0,2)S = even offsets at every level 2^j, j >= 1
  for (const auto& x : pts) {
    CHECK(x.g[0] % 2 == 0);
    CHECK(x.p.degree() >= 1);
  }
  CHECK(pts.size() == 5 + 5);

  // monoid part deeper than the ball
  auto none = oracle_ideal_points(s2, el1(0, 3), b);
  CHECK(none.empty());
}

TEST_CASE("oracle foundation sweep matches the decision procedure") {
  AdsSpec s2 = z_times_2();
  Ball b = enumerate_ball(s2, 3, 8);

  auto good = oracle_foundation_check(s2, {el1(0, 1), el1(1, 1)}, b);
  CHECK(good.ok);

  auto bad = oracle_foundation_check(s2, {el1(0, 1), el1(1, 2)}, b);
  CHECK(!bad.ok);
  REQUIRE(bad.witness.has_value());

  auto idf = oracle_foundation_check(s2, {identity_s(s2)}, b);
  CHECK(idf.ok);
}

TEST_CASE("pairwise intersection against ball enumeration") {
  AdsSpec s2 = z_times_2();
  Ball b = enumerate_ball(s2, 3, 8);
  std::mt19937_64 rng(515);
  for (int i = 0; i < 60; ++i) {
    SemidirectElement a = b.elements[rng() % b.elements.size()];
    SemidirectElement c = b.elements[rng() % b.elements.size()];
    auto pa = oracle_ideal_points(s2, a, b);
    auto pc = oracle_ideal_points(s2, c, b);
    std::vector<SemidirectElement> common;
    for (const auto& x : pa) {
      if (std::find(pc.begin(), pc.end(), x) != pc.end()) common.push_back(x);
    }
    auto meet = intersect_principal_ideals(s2, a, c);
    std::vector<SemidirectElement> via =
        meet ? oracle_ideal_points(s2, *meet, b) : std::vector<SemidirectElement>{};
    CHECK(common == via);
  }
}
