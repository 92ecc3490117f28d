#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rp2/rootsys.hpp"
#include "test_util.hpp"

using namespace rp2;
using namespace rp2::testutil;

TEST_CASE("root table matches the functional a_i - a_j") {
  CHECK(root(1, 2).row == std::array<int, 2>{1, -1});
  CHECK(root(2, 1).row == std::array<int, 2>{-1, 1});
  CHECK(root(2, 3).row == std::array<int, 2>{1, 2});
  CHECK(root(3, 2).row == std::array<int, 2>{-1, -2});
  CHECK(root(3, 1).row == std::array<int, 2>{-2, -1});
  CHECK(root(1, 3).row == std::array<int, 2>{2, 1});

  CHECK(root_value(root(1, 2), {1, 0}) == 1.0);
  CHECK(root_value(root(2, 3), {1, 1}) == 3.0);
  for (const Root& r : roots()) CHECK(root_value(r, {0, 0}) == 0.0);

  // a_i - a_j on random elements.
  auto g = rng(1);
  for (int it = 0; it < 100; ++it) {
    const CartanElement a{uniform(g, -10, 10), uniform(g, -10, 10)};
    const Vec3 d = a.diag();
    for (const Root& r : roots())
      CHECK(root_value(r, a) == doctest::Approx(d[r.i - 1] - d[r.j - 1]).epsilon(1e-14));
  }
}

TEST_CASE("trace form") {
  CHECK(trace_form({1, 0}, {1, 0}) == 2.0);
  CHECK(trace_form({1, 1}, {1, 1}) == 6.0);
  CHECK(trace_form(root_vector(1, 2).h, {3, 1}) == 2.0);

  auto g = rng(2);
  for (int it = 0; it < 1000; ++it) {
    const CartanElement a{uniform(g, -10, 10), uniform(g, -10, 10)};
    CHECK(std::abs(trace_form(a, a) - 2 * (a.s * a.s + a.s * a.t + a.t * a.t)) <= 1e-12);
    for (const RootVector& h : root_vectors())
      CHECK(std::abs(trace_form(h.h, a) - root_value(root(h.i, h.j), a)) <= 1e-12);
  }
}

TEST_CASE("weyl chamber membership") {
  CHECK(in_weyl_chamber({1, 0}, false));
  CHECK(in_weyl_chamber({1, 0}, true));
  CHECK(in_weyl_chamber({1, 1}, true));
  CHECK_FALSE(in_weyl_chamber({1, 1}, false));
  CHECK_FALSE(in_weyl_chamber({0, 1}, true));
}

TEST_CASE("weyl orbit") {
  const auto zero = weyl_orbit({0, 0});
  for (const CartanElement& e : zero) {
    CHECK(e.s == 0.0);
    CHECK(e.t == 0.0);
  }

  // Swapping a1, a2 of a(1,0) gives a(0,1).
  const auto orbit = weyl_orbit({1, 0});
  bool found = false;
  for (const CartanElement& e : orbit) found = found || (e.s == 0.0 && e.t == 1.0);
  CHECK(found);

  // a(1,1) has a1 = a2, so only 3 distinct orbit elements.
  const auto stab = weyl_orbit({1, 1});
  int distinct = 0;
  for (std::size_t i = 0; i < stab.size(); ++i) {
    bool dup = false;
    for (std::size_t j = 0; j < i; ++j)
      dup = dup || (stab[i].s == stab[j].s && stab[i].t == stab[j].t);
    if (!dup) ++distinct;
  }
  CHECK(distinct == 3);

  // Exactly one orbit element of a regular point is in the closed chamber.
  auto g = rng(3);
  for (int it = 0; it < 1000; ++it) {
    const CartanElement a{uniform(g, -10, 10), uniform(g, -10, 10)};
    if (!is_regular(a, 1e-6)) continue;
    int hits = 0;
    for (const CartanElement& e : weyl_orbit(a))
      if (in_weyl_chamber(e, true)) ++hits;
    CHECK(hits == 1);
  }
}

TEST_CASE("exp_cartan") {
  CHECK(max_abs(exp_cartan({0, 0}).m - Mat3::identity()) == 0.0);

  const Collineation h1 = exp_cartan({1, 0});
  CHECK(max_abs(h1.m - Mat3::diagonal(std::exp(1.0), 1, std::exp(-1.0))) <= 1e-14);
  CHECK(det(h1.m) == doctest::Approx(1.0).epsilon(1e-14));

  auto g = rng(4);
  for (int it = 0; it < 100; ++it) {
    const CartanElement a{uniform(g, -2, 2), uniform(g, -2, 2)};
    const CartanElement b{uniform(g, -2, 2), uniform(g, -2, 2)};
    CHECK(max_abs((exp_cartan(a) * exp_cartan(b)).m - exp_cartan(a + b).m) <= 1e-12);
  }
}

TEST_CASE("exp_cartan classifies positive hyperbolic exactly for regular elements") {
  auto g = rng(5);
  int regular_seen = 0, singular_seen = 0;
  for (int it = 0; it < 500; ++it) {
    CartanElement a{uniform(g, -3, 3), uniform(g, -3, 3)};
    if (it % 5 == 0) a.t = a.s;  // force a singular direction sometimes
    const Classification c = classify(exp_cartan(a));
    if (is_regular(a, 1e-6)) {
      ++regular_seen;
      CHECK(c.tag == ClassifyTag::positive_hyperbolic);
    } else {
      ++singular_seen;
      CHECK(c.tag != ClassifyTag::positive_hyperbolic);
    }
  }
  CHECK(regular_seen > 0);
  CHECK(singular_seen > 0);
}

TEST_CASE("singular rays and their decompositions") {
  const auto [r1, r2] = singular_rays();
  CHECK(r1.s == 1.0);
  CHECK(r1.t == 1.0);
  CHECK(r2.s == 2.0);
  CHECK(r2.t == -1.0);

  const CartanElement h12 = root_vector(1, 2).h;
  const CartanElement h13 = root_vector(1, 3).h;
  const CartanElement h23 = root_vector(2, 3).h;
  CHECK((h13 + h23).s == r1.s);
  CHECK((h13 + h23).t == r1.t);
  CHECK((h12 + h23 * 2.0).s == r1.s);
  CHECK((h12 + h23 * 2.0).t == r1.t);
  CHECK((h12 + h13).s == r2.s);
  CHECK((h12 + h13).t == r2.t);
  CHECK((h12 * 2.0 + h23).s == r2.s);
  CHECK((h12 * 2.0 + h23).t == r2.t);

  // Both rays lie on the closed chamber boundary.
  CHECK(root_value(root(1, 2), r1) == 0.0);
  CHECK(root_value(root(2, 3), r2) == 0.0);
}

TEST_CASE("root ordering on the reference chamber point") {
  const auto sorted = root_ordering();
  REQUIRE(sorted.size() == 6);
  CHECK(sorted.front().name() == "alpha_13");
  CHECK(sorted.back().name() == "alpha_31");
  const CartanElement ref{2, 1};
  CHECK(root_value(sorted[0], ref) == 5.0);
  for (int k = 0; k < 3; ++k) CHECK(root_value(sorted[static_cast<std::size_t>(k)], ref) > 0);
  for (int k = 3; k < 6; ++k) CHECK(root_value(sorted[static_cast<std::size_t>(k)], ref) < 0);
  // Negatives mirror positives.
  for (const Root& r : roots())
    CHECK(root_value(root(r.j, r.i), ref) == -root_value(r, ref));
}

TEST_CASE("root identity report passes and detects faults") {
  const RootCheckReport good = run_root_checks();
  CHECK(good.all_pass());

  auto bad_roots = roots();
  bad_roots[0].row = {-1, 1};  // flip a row
  const RootCheckReport bad = run_root_checks(bad_roots, root_vectors());
  CHECK_FALSE(bad.all_pass());
}
