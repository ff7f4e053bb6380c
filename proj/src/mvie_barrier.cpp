#include "mvie_barrier.hpp"

#include <cmath>
#include <limits>

namespace depthcraft::detail {

namespace {

// Unknowns: the center (unless pinned) followed by the lower triangle of the
// factor, column by column.
struct Layout {
  int d;
  bool pinned;
  int offset() const { return pinned ? 0 : d; }
  int size() const { return offset() + d * (d + 1) / 2; }
  int entry(int r, int k) const {  // r >= k
    return offset() + k * d - k * (k - 1) / 2 + (r - k);
  }
};

struct Point {
  Vec c;
  Mat L;
};

Point unpack(const Layout& lay, const Vec& z, const Vec& fixed_center) {
  Point p{lay.pinned ? fixed_center : Vec(z.head(lay.d)), Mat::Zero(lay.d, lay.d)};
  for (int k = 0; k < lay.d; ++k)
    for (int r = k; r < lay.d; ++r) p.L(r, k) = z[lay.entry(r, k)];
  return p;
}

// f(z + dz) - f(z) for f = -t * sum log L_kk - sum log(b_i - a_i.c - |L^T a_i|),
// written with log1p so it stays accurate when t is huge; +inf outside the domain
double barrier_change(const Layout& lay, const Mat& A, const Vec& b, const Vec& z, const Vec& dz,
                      const Vec& fixed_center, double t) {
  const Point p = unpack(lay, z, fixed_center);
  const Point dp = unpack(lay, dz, Vec::Zero(lay.d));
  double df = 0.0;
  for (int k = 0; k < lay.d; ++k) {
    const double ratio = dp.L(k, k) / p.L(k, k);
    if (ratio <= -1.0) return std::numeric_limits<double>::infinity();
    df -= t * std::log1p(ratio);
  }
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    const Vec a = A.row(i).transpose();
    const Vec w = p.L.transpose() * a;
    const Vec dw = dp.L.transpose() * a;
    const double nu = w.norm();
    const double nu_new = (w + dw).norm();
    const double s = b[i] - a.dot(p.c) - nu;
    const double dnu = (2.0 * w.dot(dw) + dw.squaredNorm()) / (nu + nu_new);
    const double ds = -a.dot(dp.c) - dnu;
    if (ds / s <= -1.0) return std::numeric_limits<double>::infinity();
    df -= std::log1p(ds / s);
  }
  return df;
}

void derivatives(const Layout& lay, const Mat& A, const Vec& b, const Vec& z,
                 const Vec& fixed_center, double t, Vec& g, Mat& H) {
  const int n = lay.size();
  const int d = lay.d;
  const Point p = unpack(lay, z, fixed_center);
  g = Vec::Zero(n);
  H = Mat::Zero(n, n);
  for (int k = 0; k < d; ++k) {
    const int e = lay.entry(k, k);
    g[e] -= t / p.L(k, k);
    H(e, e) += t / (p.L(k, k) * p.L(k, k));
  }
  Vec grad(n);
  Mat hess(n, n);
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    const Vec a = A.row(i).transpose();
    const Vec w = p.L.transpose() * a;
    const double nu = w.norm();
    const double s = b[i] - a.dot(p.c) - nu;
    // gradient and Hessian of the constraint a.c + |L^T a| - b
    grad.setZero();
    hess.setZero();
    if (!lay.pinned) grad.head(d) = a;
    for (int k = 0; k < d; ++k)
      for (int r = k; r < d; ++r) grad[lay.entry(r, k)] = a[r] * w[k] / nu;
    for (int k = 0; k < d; ++k)
      for (int r = k; r < d; ++r)
        for (int l = 0; l < d; ++l)
          for (int q = l; q < d; ++q) {
            const double delta = (k == l) ? 1.0 : 0.0;
            hess(lay.entry(r, k), lay.entry(q, l)) = a[r] * a[q] * (delta - w[k] * w[l] / (nu * nu)) / nu;
          }
    g += grad / s;
    H += grad * grad.transpose() / (s * s) + hess / s;
  }
}

}  // namespace

MvieSolution solve_mvie(const Mat& A, const Vec& b, const Vec& start, double radius,
                        bool pinned_center) {
  const int d = static_cast<int>(A.cols());
  const Layout lay{d, pinned_center};
  Vec z = Vec::Zero(lay.size());
  if (!pinned_center) z.head(d) = start;
  for (int k = 0; k < d; ++k) z[lay.entry(k, k)] = 0.5 * radius;

  const auto& tol = tolerances();
  const double m = static_cast<double>(A.rows());
  double t = 1.0;
  int steps = 0;
  Vec g;
  Mat H;
  for (;;) {
    for (;;) {
      derivatives(lay, A, b, z, start, t, g, H);
      const Vec dz = H.ldlt().solve(-g);
      const double decrement = -g.dot(dz);
      if (!(decrement > 1e-8)) break;  // centered; below this the step is roundoff
      if (++steps > tol.mvie_max_newton)
        throw SolverError("inscribed ellipsoid solver exhausted its Newton budget", m / t);
      double step = 1.0;
      while (step > 1e-14 &&
             !(barrier_change(lay, A, b, z, step * dz, start, t) <= -0.25 * step * decrement))
        step *= 0.5;
      z += step * dz;
    }
    if (m / t < tol.mvie_gap) break;
    t *= 20.0;
  }
  const Point p = unpack(lay, z, start);
  return MvieSolution{p.c, p.L, m / t, steps};
}

}  // namespace depthcraft::detail
