#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle_coxeter.hpp"
#include "rp2/coxeter.hpp"
#include "test_util.hpp"

using namespace rp2;
using namespace rp2::testutil;

namespace {

bool inside_triangle(const Vec2& pt, const Vec2& a, const Vec2& b, const Vec2& c, double tol) {
  auto side = [](const Vec2& p, const Vec2& u, const Vec2& v) {
    return (v.x - u.x) * (p.y - u.y) - (v.y - u.y) * (p.x - u.x);
  };
  const double s1 = side(pt, a, b);
  const double s2 = side(pt, b, c);
  const double s3 = side(pt, c, a);
  return (s1 > tol && s2 > tol && s3 > tol) || (s1 < -tol && s2 < -tol && s3 < -tol);
}

}  // namespace

TEST_CASE("reflections of the (3,3,4) Cartan matrix") {
  const auto rho = reflections(CartanMatrixZ::t334());
  CHECK(rho[0].m == Mat3i{{-1, 1, 1, 0, 1, 0, 0, 0, 1}});
  CHECK(rho[1].m == Mat3i{{1, 0, 0, 2, -1, 1, 0, 0, 1}});
  CHECK(rho[2].m == Mat3i{{1, 0, 0, 0, 1, 0, 1, 1, -1}});
  for (const GroupElement& r : rho) {
    CHECK(checked_mul(r.m, r.m, "test") == Mat3i::identity());
    CHECK(det(r.m) == -1);
  }
}

TEST_CASE("reflection identities hold for other valid Cartan matrices") {
  const CartanMatrixZ c = CartanMatrixZ::from(Mat3i{{2, -3, 0, -1, 2, -2, 0, -5, 2}});
  for (const GroupElement& r : reflections(c)) {
    CHECK(checked_mul(r.m, r.m, "test") == Mat3i::identity());
    CHECK(det(r.m) == -1);
  }
  CHECK_THROWS_AS(CartanMatrixZ::from(Mat3i{{1, 0, 0, 0, 2, 0, 0, 0, 2}}), Error);
  CHECK_THROWS_AS(CartanMatrixZ::from(Mat3i{{2, 1, 0, 0, 2, 0, 0, 0, 2}}), Error);
}

TEST_CASE("product orders are (4,3,3)") {
  const ProductOrders o = product_orders(CartanMatrixZ::t334());
  CHECK(o.m12 == 4);
  CHECK(o.m23 == 3);
  CHECK(o.m13 == 3);
}

TEST_CASE("commuting pair reports order 2 and free pair reports infinite") {
  // Off-diagonal zeros give commuting reflections.
  const ProductOrders o = product_orders(CartanMatrixZ::from(Mat3i{{2, 0, 0, 0, 2, 0, 0, 0, 2}}));
  CHECK(o.m12 == 2);
  CHECK(o.m23 == 2);
  CHECK(o.m13 == 2);
  // c12*c21 = 4 puts the product at infinite order.
  const ProductOrders inf =
      product_orders(CartanMatrixZ::from(Mat3i{{2, -2, 0, -2, 2, 0, 0, 0, 2}}));
  CHECK(inf.m12 == ProductOrders::infinite);
}

TEST_CASE("fundamental triangle of the (3,3,4) matrix") {
  const auto v = fundamental_triangle(CartanMatrixZ::t334());
  CHECK(proj_equal(v[0], ProjPoint::from({3, 5, 4})));
  CHECK(proj_equal(v[1], ProjPoint::from({1, 1, 1})));
  CHECK(proj_equal(v[2], ProjPoint::from({3, 4, 2})));

  // Each vertex is fixed by the two reflections whose rows define it.
  const auto rho = reflections(CartanMatrixZ::t334());
  static const int fixers[3][2] = {{1, 2}, {0, 2}, {0, 1}};
  for (int k = 0; k < 3; ++k)
    for (int f = 0; f < 2; ++f) {
      const Collineation g =
          Collineation::from(rho[static_cast<std::size_t>(fixers[k][f])].m.to_double());
      CHECK(proj_equal(apply(g, v[static_cast<std::size_t>(k)]), v[static_cast<std::size_t>(k)]));
    }
}

TEST_CASE("enumeration counts at small length") {
  const CartanMatrixZ c = CartanMatrixZ::t334();
  CHECK(enumerate(c, 0).elements.size() == 1);
  CHECK(enumerate(c, 1).elements.size() == 4);
  const Enumeration e2 = enumerate(c, 2);
  CHECK(e2.elements.size() == 10);
  CHECK(e2.count_by_length == std::vector<std::size_t>{1, 3, 6});

  // The six length-2 reduced words, with 21 distinct from 12 as matrices.
  std::vector<std::string> words2;
  for (const GroupElement& g : e2.elements)
    if (g.word.size() == 2) words2.push_back(g.word);
  CHECK(words2 == std::vector<std::string>{"12", "13", "21", "23", "31", "32"});

  CHECK_THROWS_AS(enumerate(c, 21), Error);
}

TEST_CASE("stored words reproduce the matrices and parity matches det") {
  const CartanMatrixZ c = CartanMatrixZ::t334();
  const auto rho = reflections(c);
  const Enumeration e = enumerate(c, 6);
  for (const GroupElement& g : e.elements) {
    Mat3i acc = Mat3i::identity();
    for (char ch : g.word)
      acc = checked_mul(acc, rho[static_cast<std::size_t>(ch - '1')].m, g.word);
    CHECK(acc == g.m);
    CHECK(det(g.m) == (g.word.size() % 2 == 0 ? 1 : -1));
    CHECK(is_even(g) == (g.word.size() % 2 == 0));
  }
}

TEST_CASE("matrix enumeration agrees with the abstract rewriting oracle") {
  const coxeter_oracle::Presentation pres{4, 3, 3};
  const auto want = coxeter_oracle::counts_by_length(pres, 8);
  const Enumeration e = enumerate(CartanMatrixZ::t334(), 8);
  REQUIRE(e.count_by_length.size() == want.size());
  for (std::size_t k = 0; k < want.size(); ++k) CHECK(e.count_by_length[k] == want[k]);
}

TEST_CASE("enumeration of a large-entry matrix overflows loudly") {
  const CartanMatrixZ big = CartanMatrixZ::from(
      Mat3i{{2, -4000000, -4000001, -3999999, 2, -4000002, -4000003, -4000004, 2}});
  try {
    enumerate(big, 20);
    FAIL("expected overflow");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::integer_overflow);
  }
}

TEST_CASE("tiling orbit") {
  const CartanMatrixZ c = CartanMatrixZ::t334();
  const Tiling t0 = tiling(c, 0);
  CHECK(t0.tile_vertices.size() == 1);

  const Tiling t1 = tiling(c, 1);
  CHECK(t1.tile_vertices.size() == 4);
  // Each reflected tile shares an edge (two vertices) with the base tile.
  for (std::size_t k = 1; k < 4; ++k) {
    int shared = 0;
    for (const ProjPoint& a : t1.tile_vertices[k])
      for (const ProjPoint& b : t1.tile_vertices[0])
        if (proj_equal(a, b)) ++shared;
    CHECK(shared == 2);
  }

  const Tiling t = tiling(c, 6);
  CHECK(t.tile_vertices.size() == enumerate(c, 6).elements.size());

  // All vertices on the positive side of the chart covector (1,1,1).
  const AffineChart chart = AffineChart::sum_plane();
  for (const auto& tri : t.tile_vertices)
    for (const ProjPoint& v : tri) CHECK(dot(chart.c, v.v) > 0);

  // Sampled interior points of one tile never land inside another.
  std::vector<std::array<Vec2, 3>> charted;
  charted.reserve(t.tile_vertices.size());
  for (const auto& tri : t.tile_vertices)
    charted.push_back({chart_project(chart, tri[0]), chart_project(chart, tri[1]),
                       chart_project(chart, tri[2])});
  for (std::size_t i = 0; i < charted.size(); ++i) {
    const auto& tri = charted[i];
    const Vec2 centroid{(tri[0].x + tri[1].x + tri[2].x) / 3,
                        (tri[0].y + tri[1].y + tri[2].y) / 3};
    std::array<Vec2, 4> samples{centroid,
                                Vec2{(tri[0].x + tri[1].x) / 2, (tri[0].y + tri[1].y) / 2},
                                Vec2{(tri[1].x + tri[2].x) / 2, (tri[1].y + tri[2].y) / 2},
                                Vec2{(tri[0].x + tri[2].x) / 2, (tri[0].y + tri[2].y) / 2}};
    for (std::size_t j = 0; j < charted.size(); ++j) {
      if (i == j) continue;
      for (const Vec2& s : samples)
        CHECK_FALSE(inside_triangle(s, charted[j][0], charted[j][1], charted[j][2], 1e-9));
    }
  }
}
