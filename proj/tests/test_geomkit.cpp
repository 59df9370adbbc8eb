#include <doctest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "incpar/geomkit.hpp"
#include "incpar/order.hpp"
#include "oracles.hpp"

using namespace incpar;
using geomkit::Point2D;

TEST_CASE("orient2d basic signs") {
  CHECK(geomkit::orient2d({0, 0, 0}, {1, 0, 1}, {0, 1, 2}) == 1);
  CHECK(geomkit::orient2d({0, 0, 0}, {1, 0, 1}, {2, 0, 2}) == 0);
  CHECK(geomkit::orient2d({0, 0, 0}, {0, 1, 1}, {1, 0, 2}) == -1);
}

TEST_CASE("orient2d antisymmetry under argument swaps") {
  order::Rng rng(5);
  for (int t = 0; t < 2000; ++t) {
    const Point2D a{rng.unit(), rng.unit(), 0}, b{rng.unit(), rng.unit(), 1},
        c{rng.unit(), rng.unit(), 2};
    const int s = geomkit::orient2d(a, b, c);
    CHECK(geomkit::orient2d(b, a, c) == -s);
    CHECK(geomkit::orient2d(a, c, b) == -s);
    CHECK(geomkit::orient2d(b, c, a) == s);  // cyclic
  }
}

TEST_CASE("incircle examples from the right triangle") {
  const Point2D a{0, 0, 0}, b{1, 0, 1}, c{0, 1, 2};
  CHECK(geomkit::incircle(a, b, c, {0.25, 0.25, 3}) == 1);
  CHECK(geomkit::incircle(a, b, c, {5, 5, 3}) == -1);
  CHECK(geomkit::incircle(a, b, c, {1, 1, 3}) == 0);  // cocircular
  CHECK(oracles::incircle_ref(a, b, c, {0.25, 0.25, 3}) == 1);
  CHECK(oracles::incircle_ref(a, b, c, {5, 5, 3}) == -1);
  CHECK(oracles::incircle_ref(a, b, c, {1, 1, 3}) == 0);
  CHECK_THROWS_AS(geomkit::incircle(a, b, {2, 0, 2}, {5, 5, 3}), std::invalid_argument);
}

TEST_CASE("incircle invariance under rotation, flip under reversal") {
  order::Rng rng(11);
  for (int t = 0; t < 1000; ++t) {
    const Point2D a{rng.unit(), rng.unit(), 0}, b{rng.unit(), rng.unit(), 1},
        c{rng.unit(), rng.unit(), 2}, d{rng.unit(), rng.unit(), 3};
    if (geomkit::orient2d(a, b, c) == 0) continue;
    const int s = geomkit::incircle(a, b, c, d);
    CHECK(geomkit::incircle(b, c, a, d) == s);
    CHECK(geomkit::incircle(c, a, b, d) == s);
    CHECK(geomkit::incircle(a, c, b, d) == s);  // orientation-normalized internally
  }
}

TEST_CASE("predicates match the exact rational reference on random input") {
  order::Rng rng(123);
  for (int t = 0; t < 20000; ++t) {
    const Point2D a{rng.unit(), rng.unit(), 0}, b{rng.unit(), rng.unit(), 1},
        c{rng.unit(), rng.unit(), 2}, d{rng.unit(), rng.unit(), 3};
    REQUIRE(geomkit::orient2d(a, b, c) == oracles::orient2d_ref(a, b, c));
    if (geomkit::orient2d(a, b, c) != 0)
      REQUIRE(geomkit::incircle(a, b, c, d) == oracles::incircle_ref(a, b, c, d));
  }
}

TEST_CASE("predicates survive one-ulp perturbations of cocircular points") {
  // Integer points on x^2 + y^2 = 25 are exactly representable, so the
  // unperturbed quadruples sit exactly on a common circle.
  const Point2D base[4] = {{3, 4, 0}, {4, -3, 1}, {-5, 0, 2}, {0, 5, 3}};
  int exercised = 0;
  for (int which = 0; which < 4; ++which) {
    for (int coord = 0; coord < 2; ++coord) {
      for (int dir = -1; dir <= 1; ++dir) {
        Point2D p[4] = {base[0], base[1], base[2], base[3]};
        double& v = coord == 0 ? p[which].x : p[which].y;
        if (dir != 0) v = std::nextafter(v, dir > 0 ? 1e30 : -1e30);
        const int got = geomkit::incircle(p[0], p[1], p[2], p[3]);
        const int want = oracles::incircle_ref(p[0], p[1], p[2], p[3]);
        REQUIRE(got == want);
        if (dir == 0) CHECK(got == 0);
        exercised += 1;
      }
    }
  }
  CHECK(exercised == 24);
}

TEST_CASE("circumdisk examples") {
  const auto d1 = geomkit::circumdisk({0, 0, 0}, {2, 0, 1}, {1, std::sqrt(3.0), 2});
  REQUIRE(d1.has_value());
  CHECK(d1->cx == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(d1->cy == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
  CHECK(d1->radius == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-12));

  const auto d2 = geomkit::circumdisk({0, 0, 0}, {2, 0, 1}, {0, 2, 2});
  REQUIRE(d2.has_value());
  CHECK(d2->cx == doctest::Approx(1.0));
  CHECK(d2->cy == doctest::Approx(1.0));
  CHECK(d2->radius == doctest::Approx(std::sqrt(2.0)));

  CHECK(!geomkit::circumdisk({0, 0, 0}, {1, 1, 1}, {2, 2, 2}).has_value());
}

TEST_CASE("circumdisk boundary passes through its three points") {
  order::Rng rng(3);
  for (int t = 0; t < 1000; ++t) {
    const Point2D a{rng.unit(), rng.unit(), 0}, b{rng.unit(), rng.unit(), 1},
        c{rng.unit(), rng.unit(), 2};
    const auto d = geomkit::circumdisk(a, b, c);
    if (!d) continue;
    for (const auto& p : {a, b, c}) {
      const double r = std::hypot(p.x - d->cx, p.y - d->cy);
      CHECK(std::fabs(r - d->radius) <= 1e-9 * std::max(1.0, d->radius));
    }
  }
}

TEST_CASE("diametral_side signs") {
  CHECK(geomkit::diametral_side({0, 0, 0}, {2, 0, 1}, {1, 0.5, 2}) == -1);  // inside
  CHECK(geomkit::diametral_side({0, 0, 0}, {2, 0, 1}, {0, 1, 2}) == 0);     // on
  CHECK(geomkit::diametral_side({0, 0, 0}, {2, 0, 1}, {3, 3, 2}) == 1);     // outside
}

TEST_CASE("encroaches applies the id tie-break on cocircular input") {
  const Point2D a{0, 0, 0}, b{1, 0, 1}, c{0, 1, 2};
  CHECK(geomkit::encroaches(a, b, c, {0.25, 0.25, 9}));
  CHECK(!geomkit::encroaches(a, b, c, {5, 5, 9}));
  CHECK(geomkit::encroaches(a, b, c, {1, 1, 9}));    // on circle, id above corners
  CHECK(!geomkit::encroaches(a, b, c, {1, 1, 1}));   // on circle, id below a corner
}

TEST_CASE("parse_points accepts pairs and rejects junk") {
  std::istringstream good("0.5 1.25\n\n-3 4e-2\n");
  const auto pts = geomkit::parse_points(good);
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].x == 0.5);
  CHECK(pts[1].id == 1);
  CHECK(pts[1].y == 0.04);

  std::istringstream bad1("1.0\n");
  CHECK_THROWS_AS((void)geomkit::parse_points(bad1), std::runtime_error);
  std::istringstream bad2("1 2 3\n");
  CHECK_THROWS_AS((void)geomkit::parse_points(bad2), std::runtime_error);
  std::istringstream bad3("1 nan\n");
  CHECK_THROWS_AS((void)geomkit::parse_points(bad3), std::runtime_error);
  std::istringstream bad4("inf 2\n");
  CHECK_THROWS_AS((void)geomkit::parse_points(bad4), std::runtime_error);
}
