#include "stpursuit/reachability.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "stpursuit/trigger_laws.hpp"

namespace stpursuit {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPointTol = 1e-9;         // tangency / point-lens slack
constexpr double kMinArc = 1e-10;          // radians; shorter arcs are dropped
constexpr double kBisectionRelTol = 1e-9;  // on tau
constexpr double kBracketGrowth = 1.5;

struct Arc {
  std::size_t disc = 0;
  double start = 0.0;
  double length = 0.0;
};

// [start, start + length) on the circle; length <= 2 pi.
using Interval = std::pair<double, double>;

double wrap_positive(double angle) {
  double a = std::fmod(angle, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  return a;
}

// Intersection of a union of circular intervals with the interval [a, a + w].
std::vector<Interval> clip(const std::vector<Interval>& arcs, double a, double w) {
  std::vector<Interval> out;
  for (const auto& [start, length] : arcs) {
    const double rel = wrap_positive(start - a);
    // The arc covers [rel, rel + length] and, wrapped once, [rel - 2pi, rel + length - 2pi].
    for (const double shift : {0.0, -kTwoPi}) {
      const double lo = std::max(rel + shift, 0.0);
      const double hi = std::min(rel + shift + length, w);
      if (hi > lo) out.emplace_back(wrap_positive(lo + a), hi - lo);
    }
  }
  return out;
}

bool point_in_all(const Vec2& p, std::span<const Disc> discs) {
  return std::all_of(discs.begin(), discs.end(), [&](const Disc& d) {
    return distance(p, d.center) <= d.radius + kPointTol;
  });
}

struct Boundary {
  std::vector<Arc> arcs;
  std::vector<Vec2> points;  // feasible corners and degenerate points
};

Boundary intersection_boundary(std::span<const Disc> discs) {
  Boundary out;
  const std::size_t n = discs.size();

  for (std::size_t i = 0; i < n; ++i) {
    const Disc& di = discs[i];
    if (di.radius <= 0.0) continue;
    std::vector<Interval> arcs{{0.0, kTwoPi}};
    for (std::size_t j = 0; j < n && !arcs.empty(); ++j) {
      if (j == i) continue;
      const Disc& dj = discs[j];
      const double d = distance(di.center, dj.center);
      if (d + di.radius <= dj.radius + kGeomTol) continue;  // circle i inside disc j
      if (d >= di.radius + dj.radius || d + dj.radius <= di.radius) {
        arcs.clear();  // circle i misses disc j (tangency is a point, handled below)
        continue;
      }
      const Vec2 rel = dj.center - di.center;
      const double cos_half =
          (d * d + di.radius * di.radius - dj.radius * dj.radius) / (2.0 * d * di.radius);
      const double half = std::acos(std::clamp(cos_half, -1.0, 1.0));
      arcs = clip(arcs, std::atan2(rel.y, rel.x) - half, 2.0 * half);
    }
    for (const auto& [start, length] : arcs) {
      if (length >= kMinArc) out.arcs.push_back({i, start, length});
    }
  }

  // Corners and degenerate (single point) intersections.
  for (std::size_t i = 0; i < n; ++i) {
    const Disc& di = discs[i];
    if (di.radius <= 0.0) {
      if (point_in_all(di.center, discs)) out.points.push_back(di.center);
      continue;
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      const Disc& dj = discs[j];
      const double d = distance(di.center, dj.center);
      if (d < kGeomTol || dj.radius <= 0.0) continue;
      if (d > di.radius + dj.radius + kPointTol) continue;
      if (d < std::abs(di.radius - dj.radius) - kPointTol) continue;
      const Vec2 u = (1.0 / d) * (dj.center - di.center);
      const Vec2 perp{-u.y, u.x};
      const double along = (d * d + di.radius * di.radius - dj.radius * dj.radius) / (2.0 * d);
      const double across = std::sqrt(std::max(di.radius * di.radius - along * along, 0.0));
      for (const double sign : {1.0, -1.0}) {
        const Vec2 p = di.center + along * u + (sign * across) * perp;
        if (point_in_all(p, discs)) out.points.push_back(p);
      }
    }
  }
  return out;
}

}  // namespace

void EstimateHistory::validate() const {
  double previous = 0.0;
  for (const auto& e : entries) {
    if (!e.estimate.finite()) throw DomainError("history estimate must be finite");
    if (!(e.error_radius >= 0.0)) throw DomainError("history error radius must be >= 0");
    if (!(e.elapsed > previous)) {
      throw DomainError("history elapsed times must be positive and strictly increasing");
    }
    previous = e.elapsed;
  }
}

double rdot(double tau, double nu, double x_e, double y_e, double theta_e) {
  return nu * (x_e - tau) * std::cos(theta_e) + nu * y_e * std::sin(theta_e) + tau - x_e;
}

double rdot_theta_maximized(double tau, double nu, double x_e, double y_e) {
  return nu * std::hypot(x_e - tau, y_e) + tau - x_e;
}

double g_single_disc(double tau, double nu, double d_hat, double gamma) {
  detail::require_speed_ratio(nu);
  if (!(d_hat > 0.0)) throw DomainError("d_hat must be > 0");
  if (!(gamma >= 0.0)) throw DomainError("gamma must be >= 0");
  if (!(tau >= 0.0)) throw DomainError("tau must be >= 0");
  if (tau >= d_hat / (1.0 - nu)) {
    throw DegenerateError("g_single_disc: tau >= d_hat/(1-nu), pursuer may overshoot");
  }

  const double rho = nu * tau + gamma;
  const double lead = d_hat - tau;  // estimate ahead of the pursuer along +x
  // For fixed x_e the objective grows with |y_e|, so y_e sits on the circle and the
  // problem reduces to x_e in [d_hat - rho, d_hat + rho] with
  //   F(x) = nu sqrt((x - tau)^2 + rho^2 - (x - d_hat)^2) + tau - x.
  auto objective = [&](double x) {
    const double radicand = lead * (2.0 * x - tau - d_hat) + rho * rho;
    return nu * std::sqrt(std::max(radicand, 0.0)) + tau - x;
  };
  const double lo = d_hat - rho;
  const double hi = d_hat + rho;
  if (lead > 0.0) {
    // F is concave: clamp the stationary point.
    const double stationary = 0.5 * (tau + d_hat) + (nu * nu * lead * lead - rho * rho) / (2.0 * lead);
    return objective(std::clamp(stationary, lo, hi));
  }
  // F is convex once the pursuer has reached the estimate: best endpoint.
  return std::max(objective(lo), objective(hi));
}

double relaxed_maximizer(double tau, double nu, double d) {
  return (d * d * nu * nu + d * d - 2.0 * tau * d * nu * nu - tau * tau) / (2.0 * (d - tau));
}

double g_relaxed(double tau, double nu, double d) {
  return tau - relaxed_maximizer(tau, nu, d) + nu * nu * (d - tau);
}

bool intersection_nonempty(std::span<const Disc> discs) {
  if (discs.empty()) return false;
  const Boundary b = intersection_boundary(discs);
  return !b.arcs.empty() || !b.points.empty();
}

double g_lens(const RdotProblem& problem) {
  if (problem.feasible_set.empty()) throw DomainError("g_lens: feasible set is empty");
  for (const auto& d : problem.feasible_set) {
    if (!d.center.finite() || !(d.radius >= 0.0)) {
      throw DomainError("g_lens: discs need finite centers and radius >= 0");
    }
  }
  const Boundary boundary = intersection_boundary(problem.feasible_set);
  if (boundary.arcs.empty() && boundary.points.empty()) {
    throw EmptyIntersectionError("g_lens: reachable discs do not intersect");
  }

  auto at_point = [&](const Vec2& p) {
    return rdot_theta_maximized(problem.tau, problem.nu, p.x, p.y);
  };
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& p : boundary.points) best = std::max(best, at_point(p));
  for (const Arc& arc : boundary.arcs) {
    const Disc& disc = problem.feasible_set[arc.disc];
    auto along = [&](double theta) { return at_point(disc.center + disc.radius * unit(theta)); };
    best = std::max(best, detail::maximize_on_interval(along, arc.start, arc.length));
  }
  return best;
}

std::vector<Disc> feasible_set_at(double tau, double nu, double d_hat, double gamma,
                                  const EstimateHistory& history) {
  std::vector<Disc> discs;
  discs.reserve(history.entries.size() + 1);
  discs.push_back({{d_hat, 0.0}, nu * tau + gamma});
  for (const auto& e : history.entries) {
    discs.push_back({e.estimate, nu * (tau + e.elapsed) + e.error_radius});
  }
  return discs;
}

double trigger_time(double nu, double d_hat, double gamma, const EstimateHistory& history) {
  // The memoryless root bounds the answer from below: dropping constraints can only
  // raise the supremum.
  const double lower = phi_noisy_positive(d_hat, gamma, nu);
  if (history.empty()) return lower;
  history.validate();

  auto g = [&](double tau) {
    return g_lens({tau, nu, feasible_set_at(tau, nu, d_hat, gamma, history)});
  };

  if (g(lower) >= 0.0) return lower;

  // Past (d_hat + gamma)/(1 - nu) the current disc lies behind the pursuer, so the
  // supremum is nonnegative there.
  const double cap = (d_hat + gamma) / (1.0 - nu);
  double lo = lower;
  double hi = lower;
  for (;;) {
    hi = std::min(hi * kBracketGrowth, cap);
    if (g(hi) >= 0.0) break;
    lo = hi;
    if (hi >= cap) {
      std::ostringstream msg;
      msg << "trigger_time: no sign change up to tau=" << cap;
      throw BracketError(msg.str());
    }
  }
  while (hi - lo > kBisectionRelTol * hi) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) >= 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return lo;  // last tau certified to keep the separation shrinking
}

double delta_phi_star(double nu, double gamma) {
  detail::require_speed_ratio(nu);
  if (!(gamma >= 0.0)) throw DomainError("gamma must be >= 0");
  return 2.0 * gamma / (nu + detail::cosine_complement(nu));
}

std::vector<std::size_t> forget_set(const Disc& current, const EstimateHistory& history,
                                    double nu) {
  detail::require_speed_ratio(nu);
  const std::size_t m = history.entries.size();
  std::vector<Disc> at_zero;
  at_zero.reserve(m);
  for (const auto& e : history.entries) {
    at_zero.push_back({e.estimate, nu * e.elapsed + e.error_radius});
  }

  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m; ++i) {
    bool redundant = disc_contains_disc(at_zero[i], current);
    for (std::size_t l = 0; l < m && !redundant; ++l) {
      if (l == i || !disc_contains_disc(at_zero[i], at_zero[l])) continue;
      // Identical discs contain each other; keep the lowest index of such a group.
      const bool mutual = disc_contains_disc(at_zero[l], at_zero[i]);
      redundant = !mutual || l < i;
    }
    if (redundant) out.push_back(i);
  }
  return out;
}

EstimateHistory prune_history(const EstimateHistory& history,
                              std::span<const std::size_t> forgotten) {
  EstimateHistory out;
  for (std::size_t i = 0; i < history.entries.size(); ++i) {
    if (std::find(forgotten.begin(), forgotten.end(), i) == forgotten.end()) {
      out.entries.push_back(history.entries[i]);
    }
  }
  return out;
}

}  // namespace stpursuit
