#include "barrier_lp.hpp"

#include <cmath>
#include <limits>

namespace depthcraft::detail {

namespace {

double barrier_value(const Mat& A, const Vec& b, const Vec& c, const Vec& x, double t) {
  const Vec s = b - A * x;
  if ((s.array() <= 0.0).any()) return std::numeric_limits<double>::infinity();
  return -t * c.dot(x) - s.array().log().sum();
}

}  // namespace

Vec barrier_lp(const Mat& A, const Vec& b, const Vec& c, Vec x, double gap, double unbounded_at) {
  const double m = static_cast<double>(A.rows());
  double t = 1.0;
  for (int outer = 0; outer < 80; ++outer) {
    for (int it = 0; it < 100; ++it) {
      const Vec s = b - A * x;
      const Vec inv = s.cwiseInverse();
      const Vec g = -t * c + A.transpose() * inv;
      const Mat H = A.transpose() * inv.cwiseAbs2().asDiagonal() * A;
      const Vec dx = H.ldlt().solve(-g);
      const double decrement = -g.dot(dx);
      if (!(decrement > 1e-14)) break;
      const Vec Adx = A * dx;
      double step = 1.0;
      for (Eigen::Index i = 0; i < Adx.size(); ++i)
        if (Adx[i] > 0.0) step = std::min(step, 0.99 * s[i] / Adx[i]);
      const double f0 = barrier_value(A, b, c, x, t);
      while (step > 1e-16 && barrier_value(A, b, c, x + step * dx, t) > f0 - 0.25 * step * decrement)
        step *= 0.5;
      x += step * dx;
      if (std::abs(c.dot(x)) > unbounded_at) throw InputError("linear program is unbounded");
      if (decrement < 1e-12) break;
    }
    if (m / t < gap) break;
    t *= 10.0;
  }
  return x;
}

}  // namespace depthcraft::detail
