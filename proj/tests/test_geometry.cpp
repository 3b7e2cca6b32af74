#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "support.hpp"

using namespace rauzy;
using Catch::Matchers::WithinAbs;

namespace {
Rational q(long n, long d = 1) { return make_rational(n, d); }
}

TEST_CASE("exact segment intersection") {
  Vec2 o{q(0), q(0)}, e{q(2), q(0)};
  REQUIRE(segments_intersect(o, e, Vec2{q(1), q(-1)}, Vec2{q(1), q(1)}));
  REQUIRE_FALSE(
      segments_intersect(o, e, Vec2{q(3), q(-1)}, Vec2{q(3), q(1)}));
  // touching at an interior point counts
  REQUIRE(segments_intersect(o, e, Vec2{q(1), q(0)}, Vec2{q(1), q(1)}));
  // sharing an endpoint counts
  REQUIRE(segments_intersect(o, e, e, Vec2{q(3), q(1)}));
  // collinear overlap counts, collinear disjoint does not
  REQUIRE(segments_intersect(o, e, Vec2{q(1), q(0)}, Vec2{q(3), q(0)}));
  REQUIRE_FALSE(
      segments_intersect(o, e, Vec2{q(5, 2), q(0)}, Vec2{q(3), q(0)}));
}

TEST_CASE("size-two canonical polygon in full detail") {
  PolygonSurface s =
      build_polygon(canonical_suspension(ReducedPermutation{Word{2, 1}}));
  REQUIRE(s.top_pts == std::vector<Vec2>{{q(0), q(0)}, {q(1), q(1)}, {q(2), q(0)}});
  REQUIRE(s.bottom_pts ==
          std::vector<Vec2>{{q(0), q(0)}, {q(1), q(-1)}, {q(2), q(0)}});

  REQUIRE(s.sectors.size() == 4);
  const double half_pi = M_PI / 2;
  for (const auto& sec : s.sectors)
    REQUIRE_THAT(sec.angle, WithinAbs(half_pi, 1e-12));

  REQUIRE(s.cones.size() == 1);
  REQUIRE(s.cones[0].degree == 0);
  REQUIRE_THAT(s.cones[0].total_angle, WithinAbs(2 * M_PI, 1e-12));
  REQUIRE(s.cones[0].sectors == std::vector<int>{0, 3, 2, 1});
  REQUIRE(s.genus == 1);
  REQUIRE(s.marked_cone == 0);

  // development angles by germ: (sym, at_start) -> where the walk met it
  REQUIRE_THAT(s.germ_dev[germ_id(0, true)], WithinAbs(half_pi, 1e-12));
  REQUIRE_THAT(s.germ_dev[germ_id(0, false)], WithinAbs(3 * half_pi, 1e-12));
  REQUIRE_THAT(s.germ_dev[germ_id(1, true)], WithinAbs(0.0, 1e-12));
  REQUIRE_THAT(s.germ_dev[germ_id(1, false)], WithinAbs(2 * half_pi, 1e-12));

  REQUIRE(shoelace_area(s) == q(2));
}

TEST_CASE("reversal polygons have a single cone of the right degree") {
  struct Expect {
    int d, degree, genus;
  };
  for (auto [d, degree, genus] : {Expect{4, 2, 2}, Expect{6, 4, 3}}) {
    Word w(d);
    for (int j = 0; j < d; ++j) w[j] = static_cast<uint8_t>(d - j);
    PolygonSurface s =
        build_polygon(canonical_suspension(ReducedPermutation{w}));
    REQUIRE(s.cones.size() == 1);
    REQUIRE(s.cones[0].degree == degree);
    REQUIRE(s.genus == genus);
    REQUIRE(s.marked_cone == 0);
  }
}

TEST_CASE("odd reversal splits the singularity") {
  PolygonSurface s = build_polygon(
      canonical_suspension(ReducedPermutation{Word{5, 4, 3, 2, 1}}));
  REQUIRE(s.cones.size() == 2);
  REQUIRE(s.cones[0].degree == 1);
  REQUIRE(s.cones[1].degree == 1);
  REQUIRE(s.genus == 2);
}

TEST_CASE("non-suspension heights are rejected") {
  LabeledPermutation p = parse_labeled("1 2 3 / 3 2 1");
  std::vector<Rational> lengths{q(1), q(1), q(1)};
  REQUIRE_THROWS_AS(build_polygon(p, lengths, {q(-2), q(0), q(2)}),
                    BadSuspension);
  REQUIRE_THROWS_AS(build_polygon(p, {q(1), q(0), q(1)}, {q(2), q(0), q(-2)}),
                    BadSuspension);
}

TEST_CASE("crossing broken lines are rejected") {
  LabeledPermutation p = parse_labeled("1 2 3 / 2 3 1");
  std::vector<Rational> lengths{q(1), q(1), q(1, 2)};
  std::vector<Rational> heights{q(1), q(-3, 4), q(1, 2)};
  REQUIRE(is_suspension(p, heights));
  REQUIRE_THROWS_AS(build_polygon(p, lengths, heights), BadSuspension);
}

TEST_CASE("area formula equals the shoelace integral") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 120; ++trial) {
    int d = 2 + static_cast<int>(rng() % 6);
    Suspension s = testsupport::random_suspension(rng, d);
    PolygonSurface poly = build_polygon(s);
    REQUIRE(shoelace_area(poly) == area(s));
  }
}

TEST_CASE("cone angles account for every corner") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 60; ++trial) {
    int d = 3 + static_cast<int>(rng() % 5);
    Suspension s = testsupport::random_suspension(rng, d);
    PolygonSurface poly = build_polygon(s);
    double total = 0;
    int degree_sum = 0;
    size_t sector_count = 0;
    for (const auto& c : poly.cones) {
      total += c.total_angle;
      degree_sum += c.degree;
      sector_count += c.sectors.size();
    }
    REQUIRE(sector_count == static_cast<size_t>(2 * d));
    REQUIRE(degree_sum == 2 * poly.genus - 2);
    REQUIRE_THAT(total, WithinAbs(2 * M_PI * (degree_sum + poly.cones.size()),
                                  1e-8));
    // canonical profile is a class invariant: jitter must not change it
    PolygonSurface canon =
        build_polygon(canonical_suspension(reduce(s.perm)));
    REQUIRE(canon.cones.size() == poly.cones.size());
    REQUIRE(canon.genus == poly.genus);
  }
}

TEST_CASE("intersection form on small reversals") {
  LabeledPermutation t2 = parse_labeled("1 2 / 2 1");
  REQUIRE(intersection_form(t2) ==
          std::vector<std::vector<long long>>{{0, -1}, {1, 0}});
  LabeledPermutation t4 = parse_labeled("1 2 3 4 / 4 3 2 1");
  auto m = intersection_form(t4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      REQUIRE(m[a][b] == (a > b ? 1 : a < b ? -1 : 0));
}

TEST_CASE("germ bookkeeping is a perfect matching") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    int d = 3 + static_cast<int>(rng() % 5);
    Suspension s = testsupport::random_suspension(rng, d);
    PolygonSurface poly = build_polygon(s);
    for (int g = 0; g < 2 * d; ++g) {
      REQUIRE(poly.cone_of_germ[g] >= 0);
      REQUIRE(poly.cone_of_germ[g] < static_cast<int>(poly.cones.size()));
      REQUIRE(poly.germ_dev[g] >= 0.0);
      REQUIRE(poly.germ_dev[g] <
              poly.cones[poly.cone_of_germ[g]].total_angle + 1e-9);
    }
  }
}
