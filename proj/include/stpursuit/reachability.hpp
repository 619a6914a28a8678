#ifndef STPURSUIT_REACHABILITY_HPP
#define STPURSUIT_REACHABILITY_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "stpursuit/geometry.hpp"

// Numerical side of the trigger laws. All coordinates are in the canonical frame of
// the current sample: the pursuer starts at the origin heading along +x with unit
// speed, the current evader estimate sits at (d_hat, 0), and tau is the time since
// the sample.

namespace stpursuit {

/// The feasible discs share no point: the retained history contradicts the
/// measurement model.
class EmptyIntersectionError : public std::runtime_error {
 public:
  explicit EmptyIntersectionError(const std::string& what) : std::runtime_error(what) {}
};

/// tau reached the regime where the pursuer may overshoot the estimate.
class DegenerateError : public std::runtime_error {
 public:
  explicit DegenerateError(const std::string& what) : std::runtime_error(what) {}
};

/// Root search could not bracket a sign change. Unreachable for admissible input.
class BracketError : public std::logic_error {
 public:
  explicit BracketError(const std::string& what) : std::logic_error(what) {}
};

/// Sup of the separation rate over an intersection of discs at a fixed tau.
struct RdotProblem {
  double tau = 0.0;
  double nu = 0.0;
  std::vector<Disc> feasible_set;  // already inflated to time tau
};

/// A previously sampled estimate, expressed in the current canonical frame.
struct HistoryEntry {
  Vec2 estimate;
  double error_radius = 0.0;
  double elapsed = 0.0;  // time from that sample to the current one
};

/// Retained estimates, most recent first; `elapsed` strictly increases.
struct EstimateHistory {
  std::vector<HistoryEntry> entries;

  bool empty() const { return entries.empty(); }
  /// Throws DomainError if the ordering or radius invariants are broken.
  void validate() const;
};

/// d/dt of half the squared separation for an evader at (x_e, y_e) moving along
/// theta_e.
double rdot(double tau, double nu, double x_e, double y_e, double theta_e);

/// rdot maximized over the evader heading.
double rdot_theta_maximized(double tau, double nu, double x_e, double y_e);

/// Sup of rdot over B((d_hat, 0), nu tau + gamma), in closed form.
/// Throws DegenerateError for tau >= d_hat / (1 - nu).
double g_single_disc(double tau, double nu, double d_hat, double gamma);

/// The unconstrained relaxation g~(tau) of the single-disc problem with gamma = 0.
/// It matches g_single_disc near the trigger instant, not in general.
double g_relaxed(double tau, double nu, double d);

/// Maximizer of the relaxed one-dimensional problem, x~*(tau).
double relaxed_maximizer(double tau, double nu, double d);

/// Sup of rdot_theta_maximized over the intersection of `problem.feasible_set`.
/// Throws EmptyIntersectionError when the discs share no point.
double g_lens(const RdotProblem& problem);

/// True iff all discs share at least one point (1e-9 slack on tangency).
bool intersection_nonempty(std::span<const Disc> discs);

/// Current disc plus every history disc, inflated to time tau.
std::vector<Disc> feasible_set_at(double tau, double nu, double d_hat, double gamma,
                                  const EstimateHistory& history);

/// Smallest tau > 0 at which an evader in the intersected reachable set can start
/// opening the separation. Equals phi_noisy for an empty history.
double trigger_time(double nu, double d_hat, double gamma, const EstimateHistory& history);

/// Largest possible gain of the memory-aware duration over the memoryless one.
double delta_phi_star(double nu, double gamma);

/// Indices (into history.entries) whose zero-time disc contains the current
/// measurement disc or another retained disc. Dropping them leaves trigger_time
/// unchanged. Among identical discs the lowest index is kept.
std::vector<std::size_t> forget_set(const Disc& current, const EstimateHistory& history,
                                    double nu);

/// `history` without the entries listed in `forget_set`.
EstimateHistory prune_history(const EstimateHistory& history,
                              std::span<const std::size_t> forgotten);

namespace detail {

/// Maximizes `f` over an angular interval: 64 evenly spaced seeds, then a golden
/// section polish around the best seed.
template <class F>
double maximize_on_interval(F&& f, double start, double length, double* argmax = nullptr);

}  // namespace detail

}  // namespace stpursuit

#include "stpursuit/detail/arc_search.hpp"

#endif  // STPURSUIT_REACHABILITY_HPP
