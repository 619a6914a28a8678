#ifndef STPURSUIT_GEOMETRY_HPP
#define STPURSUIT_GEOMETRY_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace stpursuit {

/// Absolute slack for geometric predicates, in length units.
inline constexpr double kGeomTol = 1e-12;

/// Raised when a law or optimizer is called outside its admissible domain.
/// The message names the violated bound.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Pursuer and evader estimate coincide; capture has already happened.
class CoincidentPointsError : public std::runtime_error {
 public:
  explicit CoincidentPointsError(const std::string& what) : std::runtime_error(what) {}
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2& operator+=(const Vec2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr Vec2& operator-=(const Vec2& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  friend constexpr Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
  friend constexpr Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
  friend constexpr Vec2 operator*(double s, const Vec2& v) { return {s * v.x, s * v.y}; }
  friend constexpr Vec2 operator*(const Vec2& v, double s) { return {s * v.x, s * v.y}; }
  friend constexpr bool operator==(const Vec2&, const Vec2&) = default;

  double norm() const { return std::hypot(x, y); }
  bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

constexpr double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double distance(const Vec2& a, const Vec2& b) { return (a - b).norm(); }

/// Unit vector at angle `theta` from +x.
inline Vec2 unit(double theta) { return {std::cos(theta), std::sin(theta)}; }

/// Wraps an angle into (-pi, pi].
double wrap_angle(double theta);

struct AgentState {
  Vec2 position;
  double heading = 0.0;  // radians, kept in (-pi, pi]
};

/// Closed ball; reachable sets are always of this form.
struct Disc {
  Vec2 center;
  double radius = 0.0;
};

/// Rigid transform taking world coordinates to the frame where the pursuer sits at
/// the origin and the evader estimate lies on the positive x-axis.
struct CanonicalFrame {
  Vec2 origin;
  double rotation = 0.0;

  Vec2 apply(const Vec2& world) const;
  Vec2 inverse(const Vec2& local) const;
  Disc apply(const Disc& world) const { return {apply(world.center), world.radius}; }
};

/// Throws CoincidentPointsError when the two points are closer than kGeomTol.
CanonicalFrame canonical_frame(const Vec2& pursuer, const Vec2& evader_estimate);

/// True iff `inner` lies inside `outer` (closed sets, kGeomTol slack).
bool disc_contains_disc(const Disc& outer, const Disc& inner);

/// True iff the closed discs share at least one point; tangency counts.
bool discs_intersect(const Disc& a, const Disc& b);

/// Inputs shared by every trigger law.
struct TriggerParams {
  double nu = 0.0;       // evader/pursuer speed ratio, [0, 1)
  double d_hat = 0.0;    // measured separation, > 0
  double gamma = 0.0;    // measurement error radius, >= 0
  double epsilon = 0.0;  // capture radius, > 0

  /// Throws DomainError naming the first violated bound.
  void validate() const;
};

}  // namespace stpursuit

#endif  // STPURSUIT_GEOMETRY_HPP
