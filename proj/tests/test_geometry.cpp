#include <doctest.h>

#include <random>

#include "stpursuit/geometry.hpp"

using namespace stpursuit;
using std::numbers::pi;

TEST_CASE("vector arithmetic") {
  const Vec2 a{1.0, 2.0};
  const Vec2 b{4.0, 6.0};
  CHECK(a + b == Vec2{5.0, 8.0});
  CHECK(b - a == Vec2{3.0, 4.0});
  CHECK(2.0 * a == Vec2{2.0, 4.0});
  CHECK(dot(a, b) == 16.0);
  CHECK(distance(a, b) == 5.0);
  CHECK_FALSE(Vec2{std::nan(""), 0.0}.finite());
}

TEST_CASE("wrap_angle lands in (-pi, pi]") {
  CHECK(wrap_angle(pi) == doctest::Approx(pi));
  CHECK(wrap_angle(-pi) == doctest::Approx(pi));
  CHECK(wrap_angle(3.0 * pi) == doctest::Approx(pi));
  CHECK(wrap_angle(2.5 * pi) == doctest::Approx(0.5 * pi));
  CHECK(wrap_angle(-0.25) == doctest::Approx(-0.25));
}

TEST_CASE("canonical frame puts the pursuer at the origin and the estimate on +x") {
  const Vec2 pursuer{1.0, 2.0};
  const Vec2 estimate{4.0, 6.0};
  const CanonicalFrame f = canonical_frame(pursuer, estimate);
  const Vec2 p = f.apply(pursuer);
  const Vec2 e = f.apply(estimate);
  CHECK(p.x == doctest::Approx(0.0));
  CHECK(p.y == doctest::Approx(0.0));
  CHECK(e.x == doctest::Approx(5.0));
  CHECK(e.y == doctest::Approx(0.0).epsilon(1e-12));

  const Disc d = f.apply(Disc{estimate, 0.3});
  CHECK(d.radius == 0.3);
  CHECK(d.center.x == doctest::Approx(5.0));
}

TEST_CASE("canonical frame is an isometry and inverts exactly") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  for (int trial = 0; trial < 200; ++trial) {
    const Vec2 pursuer{u(rng), u(rng)};
    const Vec2 estimate{u(rng), u(rng)};
    const CanonicalFrame f = canonical_frame(pursuer, estimate);
    const Vec2 a{u(rng), u(rng)};
    const Vec2 b{u(rng), u(rng)};
    CHECK(distance(f.apply(a), f.apply(b)) == doctest::Approx(distance(a, b)).epsilon(1e-12));
    const Vec2 back = f.inverse(f.apply(a));
    CHECK(back.x == doctest::Approx(a.x).epsilon(1e-12));
    CHECK(back.y == doctest::Approx(a.y).epsilon(1e-12));
    CHECK(std::abs(f.apply(estimate).y) < 1e-10);
    CHECK(f.apply(estimate).x > 0.0);
  }
}

TEST_CASE("coincident points have no canonical frame") {
  CHECK_THROWS_AS(canonical_frame({1.0, 1.0}, {1.0, 1.0}), CoincidentPointsError);
}

TEST_CASE("disc predicates") {
  const Disc big{{0.0, 0.0}, 2.0};
  CHECK(disc_contains_disc(big, {{1.0, 0.0}, 1.0}));  // internally tangent
  CHECK_FALSE(disc_contains_disc(big, {{1.5, 0.0}, 1.0}));
  CHECK(disc_contains_disc(big, big));
  CHECK(discs_intersect(big, {{3.0, 0.0}, 1.0}));  // externally tangent
  CHECK_FALSE(discs_intersect(big, {{3.1, 0.0}, 1.0}));
}

TEST_CASE("trigger parameters validate their bounds") {
  CHECK_NOTHROW((TriggerParams{0.5, 10.0, 0.1, 0.75}.validate()));
  CHECK_THROWS_AS((TriggerParams{1.0, 10.0, 0.1, 0.75}.validate()), DomainError);
  CHECK_THROWS_AS((TriggerParams{0.5, 0.0, 0.1, 0.75}.validate()), DomainError);
  CHECK_THROWS_AS((TriggerParams{0.5, 10.0, -0.1, 0.75}.validate()), DomainError);
  CHECK_THROWS_AS((TriggerParams{0.5, 10.0, 0.1, 0.0}.validate()), DomainError);
}
