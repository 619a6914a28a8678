#ifndef STPURSUIT_DETAIL_ARC_SEARCH_HPP
#define STPURSUIT_DETAIL_ARC_SEARCH_HPP

#include <algorithm>
#include <cmath>

namespace stpursuit::detail {

inline constexpr int kArcSeeds = 64;
inline constexpr double kArcTolerance = 1e-10;

template <class F>
double maximize_on_interval(F&& f, double start, double length, double* argmax) {
  double best_x = start;
  double best = f(start);
  int best_i = 0;
  const double step = length / (kArcSeeds - 1);
  for (int i = 1; i < kArcSeeds; ++i) {
    const double x = start + step * i;
    const double v = f(x);
    if (v > best) {
      best = v;
      best_x = x;
      best_i = i;
    }
  }

  // Golden section on the bracket of neighbouring seeds.
  double a = start + step * std::max(best_i - 1, 0);
  double b = start + step * std::min(best_i + 1, kArcSeeds - 1);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > kArcTolerance) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  const double v = f(x);
  if (v > best) {
    best = v;
    best_x = x;
  }
  if (argmax != nullptr) *argmax = best_x;
  return best;
}

}  // namespace stpursuit::detail

#endif  // STPURSUIT_DETAIL_ARC_SEARCH_HPP
