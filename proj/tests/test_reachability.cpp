#include <doctest.h>

#include <random>
#include <vector>

#include "stpursuit/reachability.hpp"
#include "stpursuit/trigger_laws.hpp"

using namespace stpursuit;
using doctest::Approx;

namespace {

double s_of(double nu) { return std::sqrt(1.0 - nu * nu); }

// A point evader at (x, y) keeps the separation shrinking until its reachable disc
// leaves the cone |y| <= (x - tau) s / nu.
double point_trigger_time(double nu, const Vec2& p) {
  const double s = s_of(nu);
  return (s * p.x - nu * std::abs(p.y)) / (nu + s);
}

// Boundary oracle for the intersection: dense samples of every circle plus the
// pairwise circle crossings, kept if inside all discs.
double boundary_oracle(const RdotProblem& pb) {
  std::vector<Vec2> candidates;
  constexpr int kSamples = 200000;
  const auto& discs = pb.feasible_set;
  for (const Disc& c : discs) {
    for (int i = 0; i < kSamples; ++i) {
      candidates.push_back(c.center + c.radius * unit(2.0 * std::numbers::pi * i / kSamples));
    }
  }
  for (std::size_t i = 0; i < discs.size(); ++i) {
    for (std::size_t j = i + 1; j < discs.size(); ++j) {
      const Vec2 a = discs[i].center;
      const Vec2 b = discs[j].center;
      const double ra = discs[i].radius;
      const double rb = discs[j].radius;
      const double d = distance(a, b);
      if (d == 0.0 || d > ra + rb || d < std::abs(ra - rb)) continue;
      const double along = (d * d + ra * ra - rb * rb) / (2.0 * d);
      const double across = std::sqrt(std::max(ra * ra - along * along, 0.0));
      const Vec2 e = (1.0 / d) * (b - a);
      candidates.push_back(a + along * e + across * Vec2{-e.y, e.x});
      candidates.push_back(a + along * e - across * Vec2{-e.y, e.x});
    }
  }
  double best = -1e300;
  for (const Vec2& p : candidates) {
    bool inside = true;
    for (const Disc& o : discs) inside = inside && distance(p, o.center) <= o.radius + 1e-9;
    if (inside) best = std::max(best, rdot_theta_maximized(pb.tau, pb.nu, p.x, p.y));
  }
  return best;
}

struct Geometry {
  double nu;
  double d_hat;
  double gamma;
  EstimateHistory history;
  Vec2 truth;  // current true evader position, canonical frame
};

// History consistent with a real evader: each past estimate is within its error
// radius of a past true position, itself within nu * elapsed of `truth`.
Geometry random_geometry(std::mt19937_64& rng, int entries) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Geometry g;
  g.nu = 0.9 * u(rng);
  g.d_hat = 2.0 + 18.0 * u(rng);
  g.gamma = 0.9 * g.d_hat * beta_max(g.nu) * u(rng);
  g.truth = Vec2{g.d_hat, 0.0} + g.gamma * std::sqrt(u(rng)) * unit(2.0 * std::numbers::pi * u(rng));
  double elapsed = 0.0;
  for (int j = 0; j < entries; ++j) {
    elapsed += 0.05 + 3.0 * u(rng);
    const double radius = g.gamma * (0.5 + u(rng));
    const Vec2 past_truth = g.truth + g.nu * elapsed * u(rng) * unit(2.0 * std::numbers::pi * u(rng));
    const Vec2 estimate = past_truth + radius * std::sqrt(u(rng)) * unit(2.0 * std::numbers::pi * u(rng));
    g.history.entries.push_back({estimate, radius, elapsed});
  }
  return g;
}

}  // namespace

TEST_CASE("rdot is the derivative of half the squared separation") {
  const double nu = 0.6;
  const double tau = 1.3;
  const double x = 4.0;
  const double y = -1.5;
  const double theta = 0.7;
  auto half_sq = [&](double dt) {
    const Vec2 pursuer{tau + dt, 0.0};
    const Vec2 evader = Vec2{x, y} + nu * dt * unit(theta);
    const Vec2 d = evader - pursuer;
    return 0.5 * dot(d, d);
  };
  const double h = 1e-6;
  CHECK(rdot(tau, nu, x, y, theta) == Approx((half_sq(h) - half_sq(-h)) / (2.0 * h)).epsilon(1e-8));
}

TEST_CASE("heading-maximized rate matches a heading grid") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double tau = std::abs(u(rng));
    const double nu = std::abs(u(rng)) / 5.1;
    const double x = u(rng);
    const double y = u(rng);
    double best = -1e300;
    for (int i = 0; i < 36000; ++i) {
      best = std::max(best, rdot(tau, nu, x, y, 2.0 * std::numbers::pi * i / 36000));
    }
    CHECK(rdot_theta_maximized(tau, nu, x, y) == Approx(best).epsilon(1e-7));
    CHECK(rdot_theta_maximized(tau, nu, x, y) >= best - 1e-12);
  }
}

TEST_CASE("single-disc supremum agrees with a boundary oracle") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    const double nu = 0.95 * u(rng);
    const double d = 0.5 + 20.0 * u(rng);
    const double gamma = 0.9 * d * beta_max(nu) * u(rng);
    const double tau = 0.999 * u(rng) * d / (1.0 - nu);
    const RdotProblem pb{tau, nu, {{{d, 0.0}, nu * tau + gamma}}};
    CAPTURE(trial);
    CHECK(g_single_disc(tau, nu, d, gamma) == Approx(boundary_oracle(pb)).epsilon(1e-7));
    CHECK(g_lens(pb) == Approx(g_single_disc(tau, nu, d, gamma)).epsilon(1e-9));
  }
  CHECK_THROWS_AS(g_single_disc(20.0, 0.5, 10.0, 0.0), DegenerateError);
}

TEST_CASE("lens supremum agrees with a boundary oracle") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int checked = 0;
  while (checked < 15) {
    const double tau = 3.0 * u(rng);
    const double nu = 0.95 * u(rng);
    std::vector<Disc> discs;
    const int n = 2 + static_cast<int>(2 * u(rng));
    for (int i = 0; i < n; ++i) discs.push_back({{4.0 * u(rng) - 2.0, 4.0 * u(rng) - 2.0}, 0.3 + 2.0 * u(rng)});
    if (!intersection_nonempty(discs)) {
      CHECK_THROWS_AS(g_lens({tau, nu, discs}), EmptyIntersectionError);
      continue;
    }
    const RdotProblem pb{tau, nu, discs};
    CHECK(g_lens(pb) == Approx(boundary_oracle(pb)).epsilon(1e-6));
    ++checked;
  }
}

TEST_CASE("degenerate intersections") {
  const std::vector<Disc> tangent{{{0.0, 0.0}, 1.0}, {{2.0, 0.0}, 1.0}};
  CHECK(intersection_nonempty(tangent));
  CHECK(g_lens({0.5, 0.5, tangent}) == Approx(rdot_theta_maximized(0.5, 0.5, 1.0, 0.0)));

  const std::vector<Disc> apart{{{0.0, 0.0}, 1.0}, {{2.1, 0.0}, 1.0}};
  CHECK_FALSE(intersection_nonempty(apart));
  CHECK_THROWS_AS(g_lens({0.5, 0.5, apart}), EmptyIntersectionError);

  const std::vector<Disc> point{{{3.0, 1.0}, 0.0}, {{3.0, 0.0}, 2.0}};
  CHECK(g_lens({0.0, 0.5, point}) == Approx(rdot_theta_maximized(0.0, 0.5, 3.0, 1.0)));
  CHECK_THROWS_AS(g_lens({0.0, 0.5, {}}), DomainError);
}

TEST_CASE("trigger time without memory is the noisy closed form") {
  CHECK(trigger_time(0.5, 10.0, 0.1, {}) == phi_noisy(10.0, 0.1, 0.5));
}

TEST_CASE("memory trigger time is bracketed by the memoryless law and any point of the lens") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const Geometry g = random_geometry(rng, 1 + trial % 3);
    const double memoryless = phi_noisy(g.d_hat, g.gamma, g.nu);
    const double memory = trigger_time(g.nu, g.d_hat, g.gamma, g.history);
    CAPTURE(trial);
    CHECK(memory >= memoryless - 1e-9);
    CHECK(memory <= point_trigger_time(g.nu, g.truth) * (1.0 + 1e-8) + 1e-12);
    CHECK(memory - memoryless <= delta_phi_star(g.nu, g.gamma) + 1e-9);

    // First crossing: the supremum is negative at the result and nonnegative just above.
    if (memory > memoryless) {
      const auto g_at = [&](double tau) {
        return g_lens({tau, g.nu, feasible_set_at(tau, g.nu, g.d_hat, g.gamma, g.history)});
      };
      CHECK(g_at(memory) < 0.0);
      CHECK(g_at(memory * (1.0 + 1e-8)) >= 0.0);
    }
  }
}

TEST_CASE("exact knowledge of the evader position caps the memory gain") {
  // A retained disc externally tangent to the current one at its far point pins the
  // evader there at the sampling instant.
  const double nu = 0.5;
  const double gamma = 0.1;
  const double elapsed = 1e-6;
  const double radius = nu * elapsed + gamma;
  EstimateHistory h{{{{10.0 + gamma + radius, 0.0}, gamma, elapsed}}};
  const double gain = trigger_time(nu, 10.0, gamma, h) - phi_noisy(10.0, gamma, nu);
  const double s = s_of(nu);
  CHECK(gain > 0.0);
  CHECK(gain <= gamma * (1.0 + s) / (nu + s) + 1e-9);
  CHECK(gain == Approx(2.0 * s * gamma / (nu + s)).epsilon(1e-3));
}

TEST_CASE("forgetting rule") {
  const Disc current{{10.0, 0.0}, 0.1};
  SUBCASE("a disc containing the current one is redundant") {
    EstimateHistory h{{{{9.0, 0.0}, 0.1, 4.0}}};  // radius 2.1 at the sample
    CHECK(forget_set(current, h, 0.5) == std::vector<std::size_t>{0});
  }
  SUBCASE("a disc containing another retained disc is redundant") {
    EstimateHistory h{{{{10.3, 0.0}, 0.1, 0.2}, {{10.3, 0.0}, 0.1, 3.0}}};
    CHECK(forget_set(current, h, 0.5) == std::vector<std::size_t>{1});
  }
  SUBCASE("of identical discs only the first is kept") {
    EstimateHistory h{{{{10.3, 0.0}, 0.2, 0.2}, {{10.3, 0.0}, 0.1, 0.4}}};
    CHECK(forget_set(current, h, 0.5) == std::vector<std::size_t>{1});
  }
  SUBCASE("a cutting disc is kept") {
    EstimateHistory h{{{{10.3, 0.0}, 0.1, 0.2}}};
    CHECK(forget_set(current, h, 0.5).empty());
  }
}

TEST_CASE("pruning the forgetting set leaves the trigger time unchanged") {
  std::mt19937_64 rng(23);
  int pruned_any = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Geometry g = random_geometry(rng, 3);
    const auto dropped = forget_set({{g.d_hat, 0.0}, g.gamma}, g.history, g.nu);
    pruned_any += dropped.empty() ? 0 : 1;
    const EstimateHistory kept = prune_history(g.history, dropped);
    CHECK(kept.entries.size() + dropped.size() == g.history.entries.size());
    CHECK(trigger_time(g.nu, g.d_hat, g.gamma, kept) ==
          Approx(trigger_time(g.nu, g.d_hat, g.gamma, g.history)).epsilon(1e-9));
  }
  CHECK(pruned_any > 0);
}

TEST_CASE("history ordering is validated") {
  EstimateHistory h{{{{1.0, 0.0}, 0.1, 2.0}, {{1.0, 0.0}, 0.1, 1.0}}};
  CHECK_THROWS_AS(h.validate(), DomainError);
  CHECK_THROWS_AS(trigger_time(0.5, 10.0, 0.1, h), DomainError);
}

TEST_CASE("interval maximizer") {
  double at = 0.0;
  const double best = detail::maximize_on_interval([](double t) { return std::sin(t); }, 0.0, 3.0, &at);
  CHECK(best == Approx(1.0).epsilon(1e-14));
  CHECK(at == Approx(std::numbers::pi / 2).epsilon(1e-6));
  // Maximum at an end of the interval.
  CHECK(detail::maximize_on_interval([](double t) { return t; }, 0.0, 2.0) == Approx(2.0));
}
