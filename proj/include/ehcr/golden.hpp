// One-dimensional maximization: coarse uniform grid followed by
// golden-section refinement of the best bracket.
#pragma once

#include <algorithm>
#include <cmath>

namespace ehcr {

struct ScalarSearchResult {
  double x = 0.0;
  double value = 0.0;
  long evaluations = 0;
};

// Maximizes f over [lo, hi]. Ties break toward smaller x, so the result is
// invariant under any strictly increasing transform of f. x_tolerance bounds
// the final bracket width.
template <typename F>
ScalarSearchResult maximize_scalar(F&& f, double lo, double hi, int grid_points,
                                   double x_tolerance) {
  ScalarSearchResult best;
  if (hi < lo) std::swap(lo, hi);

  auto eval = [&](double x) {
    const double v = f(x);
    if (best.evaluations == 0 || v > best.value ||
        (v == best.value && x < best.x)) {
      best.x = x;
      best.value = v;
    }
    ++best.evaluations;
    return v;
  };

  if (grid_points < 2 || hi - lo <= x_tolerance) {
    eval(lo);
    if (hi > lo) eval(hi);
    return best;
  }

  const double step = (hi - lo) / (grid_points - 1);
  int best_idx = 0;
  double best_grid_value = eval(lo);
  for (int i = 1; i < grid_points; ++i) {
    const double x = (i == grid_points - 1) ? hi : lo + i * step;
    const double v = eval(x);
    if (v > best_grid_value) {
      best_grid_value = v;
      best_idx = i;
    }
  }

  // Refine inside the two cells around the best grid point.
  double a = std::max(lo, lo + (best_idx - 1) * step);
  double b = std::min(hi, lo + (best_idx + 1) * step);

  constexpr double kInvPhi = 0.6180339887498949;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = eval(c);
  double fd = eval(d);
  while (b - a > x_tolerance) {
    if (fc >= fd) {  // ties keep the left interval
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = eval(d);
    }
  }
  return best;
}

}  // namespace ehcr
