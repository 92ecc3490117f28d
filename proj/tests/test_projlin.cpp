#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rp2/projlin.hpp"
#include "test_util.hpp"

using namespace rp2;
using namespace rp2::testutil;

namespace {

const Mat3 kRho1{{-1, 1, 1, 0, 1, 0, 0, 0, 1}};
const Mat3 kRho2{{1, 0, 0, 2, -1, 1, 0, 0, 1}};
const Mat3 kRho3{{1, 0, 0, 0, 1, 0, 1, 1, -1}};

}  // namespace

TEST_CASE("cubic solver finds well separated real roots") {
  // (x-4)(x-2)(x-1/8): x^3 - 49/8 x^2 + 35/4 x - 1
  const CubicRoots r = solve_monic_cubic(-49.0 / 8.0, 35.0 / 4.0, -1.0);
  REQUIRE(r.n_real == 3);
  CHECK(r.r[0] == doctest::Approx(4.0).epsilon(1e-13));
  CHECK(r.r[1] == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(r.r[2] == doctest::Approx(0.125).epsilon(1e-13));
}

TEST_CASE("cubic solver reports a single real root for x^3 - 1") {
  const CubicRoots r = solve_monic_cubic(0, 0, -1);
  REQUIRE(r.n_real == 1);
  CHECK(r.r[0] == doctest::Approx(1.0));
}

TEST_CASE("symmetric eigensolver reproduces the matrix") {
  auto g = rng(11);
  for (int it = 0; it < 50; ++it) {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) m(i, j) = m(j, i) = uniform(g, -3, 3);
    const SymmetricEigen e = eigen_symmetric(m);
    const Mat3 back = e.vectors * Mat3::diagonal(e.values[0], e.values[1], e.values[2]) *
                      transpose(e.vectors);
    CHECK(max_abs(back - m) <= 1e-12 * std::max(1.0, max_abs(m)));
  }
}

TEST_CASE("normalize_point canonical form") {
  CHECK(vec_close(ProjPoint::from({2, 2, 2}).v, {1, 1, 1}, 0));
  CHECK(vec_close(ProjPoint::from({0, -3, 0}).v, {0, 1, 0}, 0));
  CHECK(vec_close(ProjPoint::from({3, 4, 2}).v, {0.75, 1, 0.5}, 0));
  // Idempotent.
  const ProjPoint p = ProjPoint::from({3, 4, 2});
  CHECK(vec_close(ProjPoint::from(p.v).v, p.v, 0));
  try {
    ProjPoint::from({1e-301, 0, 0});
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::zero_vector);
  }
}

TEST_CASE("projective equality via vanishing minors") {
  CHECK(proj_equal(ProjPoint::from({1, 2, 3}), ProjPoint::from({-2, -4, -6})));
  CHECK_FALSE(proj_equal(ProjPoint::from({1, 2, 3}), ProjPoint::from({1, 2, 3.001})));
}

TEST_CASE("join and meet") {
  CHECK(vec_close(join(ProjPoint::from({1, 0, 0}), ProjPoint::from({0, 1, 0})).l, {0, 0, 1}, 0));
  const ProjPoint m = meet(ProjLine::from({2, -1, -1}), ProjLine::from({-1, -1, 2}));
  CHECK(proj_equal(m, ProjPoint::from({1, 1, 1})));
  const ProjLine l = join(ProjPoint::from({1, 0, 1}), ProjPoint::from({-1, 0, 1}));
  CHECK(proj_equal(l, ProjLine::from({0, 1, 0})));
  // Returned line contains both points.
  CHECK(incident(l, ProjPoint::from({1, 0, 1})));
  CHECK(incident(l, ProjPoint::from({-1, 0, 1})));
  try {
    join(ProjPoint::from({1, 1, 1}), ProjPoint::from({2, 2, 2}));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::coincident_arguments);
  }
}

TEST_CASE("collineation normalization and apply") {
  const Collineation id = Collineation::identity();
  CHECK(vec_close(apply(id, ProjPoint::from({1, 2, 3})).v, {1.0 / 3, 2.0 / 3, 1}, 1e-15));

  const Collineation d = Collineation::from(Mat3::diagonal(std::exp(1.0), 1, std::exp(-1.0)));
  const Vec3 want = {1.0, std::exp(-1.0), std::exp(-2.0)};
  CHECK(vec_close(apply(d, ProjPoint::from({1, 1, 1})).v, want, 1e-14));

  // Reflections have determinant -1; the normalized representative acts the
  // same way on RP^2.
  const Collineation r1 = Collineation::from(kRho1);
  CHECK(det(r1.m) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(proj_equal(apply(r1, ProjPoint::from({1, 1, 1})), ProjPoint::from({1, 1, 1})));

  CHECK_THROWS_AS(Collineation::from(Mat3{{1, 0, 0, 0, 1, 0, 0, 0, 0}}), Error);
}

TEST_CASE("apply is a group action") {
  auto gen = rng(22);
  for (int it = 0; it < 100; ++it) {
    const Collineation g = Collineation::from(random_invertible(gen));
    const Collineation h = Collineation::from(random_invertible(gen));
    const ProjPoint p = ProjPoint::from({uniform(gen, -1, 1), uniform(gen, -1, 1), 1.0});
    CHECK(proj_equal(apply(g * h, p), apply(g, apply(h, p)), 1e-9));
  }
}

TEST_CASE("apply_to_conic") {
  const Conic circle = Conic::unit_circle();
  CHECK(conic_equal(apply_to_conic(Collineation::identity(), circle), circle));

  const double t = 0.7;
  const Collineation g = Collineation::from(Mat3::diagonal(1, std::exp(t), 1));
  const Conic q = Conic::from(Mat3{{0, 0, -1, 0, 2, 0, -1, 0, 0}});
  const Conic want = Conic::from(Mat3{{0, 0, -1, 0, 2 * std::exp(-2 * t), 0, -1, 0, 0}});
  CHECK(conic_equal(apply_to_conic(g, q), want, 1e-12));

  // Point mapping: p on Q iff g(p) on the image conic.
  auto gen = rng(33);
  for (int it = 0; it < 50; ++it) {
    const Collineation h = Collineation::from(random_invertible(gen));
    const ProjPoint p = circle_point(uniform(gen, 0, 2 * M_PI));
    CHECK(on_conic(apply_to_conic(h, circle), apply(h, p), 1e-9));
  }

  // Congruence preserves the sign of det (checked on the raw congruence;
  // the canonical-form sign flip may negate the stored matrix).
  for (int it = 0; it < 20; ++it) {
    const Collineation h = Collineation::from(random_invertible(gen));
    const Mat3 inv = h.inverse().m;
    CHECK(det(transpose(inv) * circle.q * inv) < 0);
  }
}

TEST_CASE("apply_to_conic is contravariant") {
  auto gen = rng(44);
  const Conic q = Conic::unit_circle();
  for (int it = 0; it < 50; ++it) {
    const Collineation g = Collineation::from(random_invertible(gen));
    const Collineation h = Collineation::from(random_invertible(gen));
    CHECK(conic_equal(apply_to_conic(g * h, q), apply_to_conic(g, apply_to_conic(h, q)), 1e-9));
  }
}

TEST_CASE("classify recognizes the diagonal case") {
  const Classification c = classify(Collineation::from(Mat3::diagonal(2, 1, 0.5)));
  REQUIRE(c.tag == ClassifyTag::positive_hyperbolic);
  CHECK(c.s == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(c.t == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("classify rejects rotations and torsion") {
  const Classification rot = classify(Collineation::from(Mat3{{0, -1, 0, 1, 0, 0, 0, 0, 1}}));
  CHECK(rot.tag == ClassifyTag::complex_pair);

  // rho2 * rho3 has order 3 and trace 0: eigenvalues are the cube roots of 1.
  const Mat3 p = kRho2 * kRho3;
  CHECK(trace(p) == doctest::Approx(0.0));
  const Classification tor = classify(Collineation::from(p));
  CHECK(tor.tag == ClassifyTag::complex_pair);

  const Classification rep = classify(Collineation::identity());
  CHECK(rep.tag == ClassifyTag::repeated_eigenvalues);

  // Two negative eigenvalues, one positive.
  const Classification neg = classify(Collineation::from(Mat3::diagonal(-2, -1, 0.5)));
  CHECK(neg.tag == ClassifyTag::non_positive_root);
}

TEST_CASE("classify is conjugation invariant") {
  auto gen = rng(55);
  const Collineation g = Collineation::from(Mat3::diagonal(3.0, 1.3, 1.0 / 3.9));
  const Classification base = classify(g);
  REQUIRE(base.tag == ClassifyTag::positive_hyperbolic);
  for (int it = 0; it < 100; ++it) {
    const Collineation m = Collineation::from(random_invertible(gen));
    const Classification c = classify(m * g * m.inverse());
    CHECK(c.tag == ClassifyTag::positive_hyperbolic);
    CHECK(c.s == doctest::Approx(base.s).epsilon(1e-8));
    CHECK(c.t == doctest::Approx(base.t).epsilon(1e-8));
  }
}

TEST_CASE("eigenbasis of a diagonal matrix") {
  const EigenBasis eb = eigenbasis(Collineation::from(Mat3::diagonal(4, 2, 0.125)));
  CHECK(proj_equal(eb.attracting, ProjPoint::from({1, 0, 0})));
  CHECK(proj_equal(eb.middle, ProjPoint::from({0, 1, 0})));
  CHECK(proj_equal(eb.repelling, ProjPoint::from({0, 0, 1})));
}

TEST_CASE("eigenbasis recovers the conjugating columns") {
  auto gen = rng(66);
  for (int it = 0; it < 50; ++it) {
    const Mat3 m = random_invertible(gen);
    const Collineation g = Collineation::from(m * Mat3::diagonal(4, 2, 0.125) * adjugate(m));
    const EigenBasis eb = eigenbasis(g);
    CHECK(proj_equal(eb.attracting, ProjPoint::from(m.col(0)), 1e-7));
    CHECK(proj_equal(eb.middle, ProjPoint::from(m.col(1)), 1e-7));
    CHECK(proj_equal(eb.repelling, ProjPoint::from(m.col(2)), 1e-7));
    // Residuals relative to the matrix scale.
    const ProjPoint* v[3] = {&eb.attracting, &eb.middle, &eb.repelling};
    const double mag = frobenius(g.m);
    for (int k = 0; k < 3; ++k) {
      const Vec3 gv = mul(g.m, v[k]->v);
      const Vec3 lv = scale(v[k]->v, eb.eigenvalues[static_cast<std::size_t>(k)]);
      CHECK(norm(sub(gv, lv)) <= 1e-9 * mag);
    }
  }
}

TEST_CASE("eigenbasis is shared with the square") {
  const Collineation g = Collineation::from(Mat3{{2, 1, 0, 0, 1, 1, 0, 0, 0.5}});
  REQUIRE(classify(g).tag == ClassifyTag::positive_hyperbolic);
  const EigenBasis a = eigenbasis(g);
  const EigenBasis b = eigenbasis(g * g);
  CHECK(proj_equal(a.attracting, b.attracting, 1e-8));
  CHECK(proj_equal(a.middle, b.middle, 1e-8));
  CHECK(proj_equal(a.repelling, b.repelling, 1e-8));
}

TEST_CASE("eigenbasis requires positive hyperbolic input") {
  try {
    eigenbasis(Collineation::identity());
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_positive_hyperbolic);
  }
}

TEST_CASE("tangent line and pole") {
  const Conic q = Conic::standard_y2_xz();
  const ProjLine t = tangent_line(q, ProjPoint::from({1, 0, 0}));
  CHECK(proj_equal(t, ProjLine::from({0, 0, 1})));

  const Conic circle = Conic::unit_circle();
  const ProjLine chord = join(ProjPoint::from({1, 0, 1}), ProjPoint::from({-1, 0, 1}));
  CHECK(proj_equal(pole(circle, chord), ProjPoint::from({0, 1, 0})));

  auto gen = rng(77);
  for (int it = 0; it < 100; ++it) {
    const ProjPoint p = circle_point(uniform(gen, 0, 2 * M_PI));
    const ProjLine tl = tangent_line(circle, p);
    CHECK(incident(tl, p, 1e-9));  // polarity: p lies on its own tangent
    CHECK(proj_equal(pole(circle, tl), p, 1e-9));
  }

  try {
    tangent_line(circle, ProjPoint::from({0.5, 0, 1}));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::point_not_on_conic);
  }
  try {
    tangent_line(Conic::from(Mat3::diagonal(1, -1, 0)), ProjPoint::from({1, 1, 1}));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::degenerate_conic);
  }
}

TEST_CASE("chart projection") {
  const Vec2 a = chart_project(AffineChart::z_plane(), ProjPoint::from({3, 4, 2}));
  CHECK(a.x == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(a.y == doctest::Approx(2.0).epsilon(1e-14));

  const Vec2 b = chart_project(AffineChart::sum_plane(), ProjPoint::from({1, 1, 1}));
  CHECK(b.x == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(b.y == doctest::Approx(1.0 / 3).epsilon(1e-14));

  try {
    chart_project(AffineChart::z_plane(), ProjPoint::from({1, 0, 0}));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::at_infinity);
  }
}

TEST_CASE("chord frame worked example on the unit circle") {
  const Conic circle = Conic::unit_circle();
  const Mat3 m =
      conic_chord_frame(circle, ProjPoint::from({1, 0, 1}), ProjPoint::from({-1, 0, 1}));
  CHECK(vec_close(m.col(0), {1, 0, 1}, 1e-14));
  CHECK(vec_close(m.col(1), {0, 2, 0}, 1e-14));
  CHECK(vec_close(m.col(2), {-1, 0, 1}, 1e-14));
  // Pulled-back form proportional to y^2 - xz.
  const Conic pulled = Conic::from(transpose(m) * circle.q * m);
  CHECK(conic_equal(pulled, Conic::standard_y2_xz(), 1e-12));
}

TEST_CASE("chord frame of the standard conic is the identity") {
  const Conic q = Conic::standard_y2_xz();
  const Mat3 m = conic_chord_frame(q, ProjPoint::from({1, 0, 0}), ProjPoint::from({0, 0, 1}));
  CHECK(max_abs(m - Mat3::identity()) <= 1e-12);
}

TEST_CASE("sample_conic_arc picks the witnessed side") {
  const Conic circle = Conic::unit_circle();
  const ProjPoint p = ProjPoint::from({1, 0, 1});
  const ProjPoint q = ProjPoint::from({-1, 0, 1});

  const auto upper = sample_conic_arc(circle, p, q, ProjPoint::from({0, 1, 1}), 3);
  REQUIRE(upper.size() == 3);
  CHECK(proj_equal(upper[0], p));
  CHECK(proj_equal(upper[1], ProjPoint::from({0, 1, 1}), 1e-12));
  CHECK(proj_equal(upper[2], q));

  const auto lower = sample_conic_arc(circle, p, q, ProjPoint::from({0, -1, 1}), 3);
  CHECK(proj_equal(lower[1], ProjPoint::from({0, -1, 1}), 1e-12));

  const auto two = sample_conic_arc(circle, p, q, ProjPoint::from({0, 1, 1}), 2);
  REQUIRE(two.size() == 2);
  CHECK(proj_equal(two[0], p));
  CHECK(proj_equal(two[1], q));

  const auto many = sample_conic_arc(circle, p, q, ProjPoint::from({0.6, 0.8, 1}), 50);
  for (const ProjPoint& x : many) CHECK(std::abs(circle.eval(x)) <= 1e-9);

  try {
    sample_conic_arc(circle, ProjPoint::from({0.5, 0, 1}), q, ProjPoint::from({0, 1, 1}), 4);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::endpoints_not_on_conic);
  }
  try {
    sample_conic_arc(circle, p, q, ProjPoint::from({1, 0, 1}), 4);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::witness_on_wrong_component);
  }
}
