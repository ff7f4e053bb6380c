#pragma once

#include "depthcraft/common.hpp"

#include <optional>

namespace depthcraft::detail {

struct MvieSolution {
  Vec center;
  Mat factor;  // lower triangular, positive diagonal
  double gap = 0.0;
  int newton_steps = 0;
};

// Maximum-volume ellipsoid {c + L u : |u| < 1} inside {A z <= b} (rows of A
// unit length) by a log-barrier Newton method on (c, L). With `pinned_center`
// the center is held fixed. The start is the ball B(start, 0.5 radius), which
// must lie inside.
MvieSolution solve_mvie(const Mat& A, const Vec& b, const Vec& start, double radius,
                        bool pinned_center);

}  // namespace depthcraft::detail
