#include <set>

#include "doctest.h"
#include "shrinkcy/error.hpp"
#include "shrinkcy/fan_surface.hpp"
#include "shrinkcy/shrink.hpp"

using namespace shrinkcy;

static std::string data_file(const char* name) {
  return std::string(SHRINKCY_TEST_DATA_DIR) + "/" + name;
}

static std::array<Vec2, 3> key(Vec2 a, Vec2 b, Vec2 c) { return {a, b, c}; }

TEST_CASE("star surface model carries the ray intersection numbers") {
  FanSection fs = triangulate(weights_to_triangle(1, 1, 3));
  SurfaceModel m = star_surface_model(star_of(fs, {0, 0}), "t113:(0,0)");
  CHECK(m.name == "F3");
  CHECK(m.basis_id == "t113:(0,0)");
  CHECK(m.rank() == 4);
  CHECK(m.gram.labels ==
        std::vector<std::string>{"(1,0)", "(0,1)", "(-1,-3)", "(0,-1)"});
  CHECK(m.gram.entries[0][0] == 0);
  CHECK(m.gram.entries[1][1] == 3);
  CHECK(m.gram.entries[3][3] == -3);
  CHECK(m.gram.entries[0][1] == 1);
  CHECK(m.gram.entries[1][0] == 1);
  CHECK(m.gram.entries[0][2] == 0);
  CHECK(m.gram.entries[0][3] == 1);  // cyclically adjacent
  CHECK(k_squared(m) == 8);
  CHECK(m.catalog_kind == CatalogKind::ToricStar);
  REQUIRE(m.catalog.size() == 4);
  for (const auto& c : m.catalog) {
    CHECK(c.role == CurveRole::MoriGenerator);
    CHECK(adjunction_genus(m, c.cls) == Rational(0));
  }

  SurfaceModel p = star_surface_model(star_of(fs, {0, -1}), "t113:(0,-1)");
  CHECK(p.name == "P2");
  CHECK(p.rank() == 3);
  CHECK(k_squared(p) == 9);
  // with three rays every pair is adjacent
  CHECK(p.gram.entries[0][1] == 1);
  CHECK(p.gram.entries[1][2] == 1);
  CHECK(p.gram.entries[0][2] == 1);
}

TEST_CASE("two-star section assembles into a glued pair") {
  FanSection fs = triangulate(weights_to_triangle(1, 1, 3));
  SncSurface s = snc_from_fan(fs, "t113");
  REQUIRE(s.size() == 2);
  // coordinate order: (0,-1) before (0,0)
  CHECK(s.components()[0].name == "P2");
  CHECK(s.components()[1].name == "F3");
  CHECK(s.cy().ok);
  REQUIRE(s.gluings().size() == 1);
  CHECK(s.gluings()[0].genus == 0);

  CHECK(triple_intersection(s, 0, 0, 0) == 9);
  CHECK(triple_intersection(s, 0, 0, 1) == -3);
  CHECK(triple_intersection(s, 0, 1, 1) == 1);
  CHECK(triple_intersection(s, 1, 1, 1) == 8);

  // same numbers as the direct fan computation, every compact multiset
  auto triples = toric_triples(fs);
  std::vector<Vec2> pts = interior_points(fs);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i; j < pts.size(); ++j)
      for (std::size_t k = j; k < pts.size(); ++k)
        CHECK(triple_intersection(s, i, j, k) ==
              triples.at(key(pts[i], pts[j], pts[k])));
}

TEST_CASE("hexagon section pair agrees with the fan numbers and shrinks") {
  FanSection fs = load_triangulation(data_file("fig1.tri"));
  SncSurface s = snc_from_fan(fs, "fig1");
  REQUIRE(s.size() == 2);
  CHECK(s.components()[0].name == "dP2");
  CHECK(s.components()[1].name == "dP2");

  auto triples = toric_triples(fs);
  std::vector<Vec2> pts = interior_points(fs);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i; j < pts.size(); ++j)
      for (std::size_t k = j; k < pts.size(); ++k)
        CHECK(triple_intersection(s, i, j, k) ==
              triples.at(key(pts[i], pts[j], pts[k])));

  std::vector<Int> ones{Int(1), Int(1)};
  CHECK(j_squared_component(s, ones, 0) == 4);
  CHECK(j_squared_component(s, ones, 1) == 4);

  ShrinkReport r = decide_rank2(s);
  CHECK(r.status == ShrinkStatus::PreShrinkable);
  REQUIRE(r.certificate.has_value());
  CHECK(*r.certificate == ones);
  CHECK(certificate_verify(s, *r.certificate).ok);
}

TEST_CASE("a cell with three compact corners cannot be glued pairwise") {
  FanSection fs = load_triangulation(data_file("p124.tri"));
  CHECK_THROWS_WITH_AS((void)snc_from_fan(fs, "p124"),
                       doctest::Contains("three compact corners"),
                       ValidationError);
}

TEST_CASE("single-star section builds a lone component") {
  FanSection fs = triangulate(quotient_to_triangle(4, 1, 1, 2));
  SncSurface s = snc_from_fan(fs, "t112");
  REQUIRE(s.size() == 1);
  CHECK(s.components()[0].name == "F2");
  CHECK(s.gluings().empty());
  CHECK(triple_intersection(s, 0, 0, 0) == 8);
  CHECK(toric_triple(fs, {0, 0}, {0, 0}, {0, 0}) == 8);
}

TEST_CASE("sections without compact surfaces are rejected") {
  FanSection fs = triangulate_polygon({{0, 0}, {1, 0}, {0, 1}});
  CHECK_THROWS_AS((void)snc_from_fan(fs, "unit"), ValidationError);
}
