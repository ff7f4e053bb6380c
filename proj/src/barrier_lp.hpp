#pragma once

#include "depthcraft/common.hpp"

namespace depthcraft::detail {

// maximize c.x subject to A x <= b by a log-barrier path-following method,
// started from a strictly feasible x0. Intended for the tiny LPs this library
// needs (Chebyshev centers, bounding boxes). Throws InputError when the
// objective grows past `unbounded_at`.
Vec barrier_lp(const Mat& A, const Vec& b, const Vec& c, Vec x0, double gap = 1e-10,
               double unbounded_at = 1e12);

}  // namespace depthcraft::detail
