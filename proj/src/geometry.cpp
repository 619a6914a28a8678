#include "stpursuit/geometry.hpp"

namespace stpursuit {

double wrap_angle(double theta) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double wrapped = std::remainder(theta, two_pi);  // [-pi, pi]
  if (wrapped <= -std::numbers::pi) wrapped += two_pi;
  return wrapped;
}

Vec2 CanonicalFrame::apply(const Vec2& world) const {
  const Vec2 d = world - origin;
  const double c = std::cos(rotation);
  const double s = std::sin(rotation);
  return {c * d.x - s * d.y, s * d.x + c * d.y};
}

Vec2 CanonicalFrame::inverse(const Vec2& local) const {
  const double c = std::cos(rotation);
  const double s = std::sin(rotation);
  return Vec2{c * local.x + s * local.y, -s * local.x + c * local.y} + origin;
}

CanonicalFrame canonical_frame(const Vec2& pursuer, const Vec2& evader_estimate) {
  const Vec2 rel = evader_estimate - pursuer;
  if (rel.norm() < kGeomTol) {
    throw CoincidentPointsError("canonical_frame: pursuer and evader estimate coincide");
  }
  return {pursuer, wrap_angle(-std::atan2(rel.y, rel.x))};
}

bool disc_contains_disc(const Disc& outer, const Disc& inner) {
  return distance(inner.center, outer.center) + inner.radius <= outer.radius + kGeomTol;
}

bool discs_intersect(const Disc& a, const Disc& b) {
  return distance(a.center, b.center) <= a.radius + b.radius + kGeomTol;
}

void TriggerParams::validate() const {
  if (!(nu >= 0.0 && nu < 1.0)) throw DomainError("nu must lie in [0, 1)");
  if (!(d_hat > 0.0)) throw DomainError("d_hat must be > 0");
  if (!(gamma >= 0.0)) throw DomainError("gamma must be >= 0");
  if (!(epsilon > 0.0)) throw DomainError("epsilon must be > 0");
}

}  // namespace stpursuit
