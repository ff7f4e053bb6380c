#include "depthcraft/macbeath.hpp"

#include "mvie_barrier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace depthcraft {

double unit_ball_volume(int d) {
  return std::pow(std::numbers::pi, 0.5 * d) / std::tgamma(0.5 * d + 1.0);
}

double Ellipsoid::volume() const { return unit_ball_volume(dim()) / std::sqrt(shape.determinant()); }

MacbeathRegion macbeath_region(const HPolytope& K, const Vec& x, double lambda) {
  if (!(lambda > 0.0)) throw InputError("lambda must be positive");
  if (!interior_contains(K, x)) throw DomainError("base point is not interior to the body");
  const Eigen::Index n = K.rows();
  Mat A(2 * n, K.dim());
  Vec b(2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double bound = lambda * (K.b()[i] - K.A().row(i).dot(x));
    const double ax = K.A().row(i).dot(x);
    A.row(2 * i) = K.A().row(i);
    b[2 * i] = ax + bound;
    A.row(2 * i + 1) = -K.A().row(i);
    b[2 * i + 1] = bound - ax;
  }
  return MacbeathRegion{x, lambda, HPolytope(std::move(A), std::move(b))};
}

MveeResult symmetric_mvee(const Mat& P) {
  const Eigen::Index d = P.rows();
  const Eigen::Index m = P.cols();
  const auto& tol = tolerances();
  const double dd = static_cast<double>(d);

  Vec u = Vec::Constant(m, 1.0 / static_cast<double>(m));
  Vec omega(m);
  Mat Vinv;
  auto refresh = [&] {
    const Mat V = P * u.asDiagonal() * P.transpose();
    Vinv = V.inverse();
    omega = (P.transpose() * Vinv * P).diagonal();
  };
  refresh();

  // A degenerate optimum (a touching point of zero weight) slows the ascent
  // to a sublinear rate; the caller then finishes with the primal solver.
  const int khachiyan_budget = std::min(tol.khachiyan_max_iter, 400);
  int it = 0;
  double residual = 0.0;
  for (; it < khachiyan_budget; ++it) {
    Eigen::Index up = 0;
    const double wmax = omega.maxCoeff(&up);
    Eigen::Index down = -1;
    double wmin = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < m; ++i)
      if (u[i] > 0.0 && omega[i] < wmin) {
        wmin = omega[i];
        down = i;
      }
    residual = std::max(wmax / dd - 1.0, 1.0 - wmin / dd);
    if (residual <= tol.khachiyan_tol) break;

    Eigen::Index j;
    double tau;
    if (!std::isfinite(wmax)) throw SolverError("symmetric MVEE lost precision", residual);
    if (down < 0 || wmax - dd >= dd - wmin || u[down] >= 1.0 - 1e-12) {
      j = up;
      tau = (wmax - dd) / (dd * (wmax - 1.0));
      if (!(tau > 0.0)) throw SolverError("symmetric MVEE stalled", residual);
    } else {
      j = down;
      // for wmin <= 1 the objective improves all the way to dropping the point
      const double drop = -u[j] / (1.0 - u[j]);
      tau = wmin > 1.0 ? std::max((wmin - dd) / (dd * (wmin - 1.0)), drop) : drop;
    }
    // V <- (1 - tau) V + tau p_j p_j^T, updated through Sherman-Morrison
    const Vec pj = P.col(j);
    const Vec Vp = Vinv * pj;
    const double wj = omega[j];
    const double denom = (1.0 - tau) + tau * wj;
    const Vec cross = P.transpose() * Vp;
    omega = (omega - (tau / denom) * cross.cwiseAbs2()) / (1.0 - tau);
    Vinv = (Vinv - (tau / denom) * Vp * Vp.transpose()) / (1.0 - tau);
    u *= (1.0 - tau);
    u[j] += tau;
    if (u[j] < 1e-15) u[j] = 0.0;
    if ((it + 1) % 64 == 0) refresh();
  }
  if (residual > tol.khachiyan_tol || (u.array() < 0.0).any())
    throw SolverError("symmetric MVEE did not converge", residual);
  const Mat V = P * u.asDiagonal() * P.transpose();
  return MveeResult{(dd * V).inverse(), u, it, residual};
}

Mat symmetric_mvie_shape(const Mat& P) {
  const double d = static_cast<double>(P.rows());
  try {
    const MveeResult r = symmetric_mvee(P);
    const Mat V = P * r.weights.asDiagonal() * P.transpose();
    const Vec omega = (P.transpose() * V.inverse() * P).diagonal();
    // polar of {z^T (dV)^{-1} z <= 1} is {y^T (dV) y <= 1}; shrink so every
    // |p_i.y| <= 1 holds on the nose
    return d * V * std::max(1.0, omega.maxCoeff() / d);
  } catch (const SolverError&) {
  }
  // rows +-p_i/|p_i| with right-hand side 1/|p_i|, center pinned at 0
  const Eigen::Index m = P.cols();
  Mat A(2 * m, P.rows());
  Vec b(2 * m);
  double radius = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < m; ++i) {
    const double n = P.col(i).norm();
    A.row(2 * i) = P.col(i).transpose() / n;
    A.row(2 * i + 1) = -P.col(i).transpose() / n;
    b[2 * i] = b[2 * i + 1] = 1.0 / n;
    radius = std::min(radius, 1.0 / n);
  }
  const auto sol = detail::solve_mvie(A, b, Vec::Zero(P.rows()), radius, true);
  const Mat Linv = sol.factor.triangularView<Eigen::Lower>().solve(Mat::Identity(P.rows(), P.rows()));
  return Linv.transpose() * Linv;
}

Ellipsoid macbeath_ellipsoid(const HPolytope& K, const Vec& x, double lambda) {
  if (!(lambda > 0.0)) throw InputError("lambda must be positive");
  if (!interior_contains(K, x)) throw DomainError("base point is not interior to the body");
  const Eigen::Index n = K.rows();
  Mat P(K.dim(), n);
  for (Eigen::Index i = 0; i < n; ++i)
    P.col(i) = K.A().row(i).transpose() / (K.b()[i] - K.A().row(i).dot(x));
  return Ellipsoid{x, symmetric_mvie_shape(P) / (lambda * lambda)};
}

double ellipsoid_separation(const Ellipsoid& E1, const Ellipsoid& E2) {
  // y = c1 + L^{-T} u with Q1 = L L^T maps the closed E1 to |u| <= 1
  const Eigen::LLT<Mat> llt(E1.shape);
  const Mat L = llt.matrixL();
  const Mat Linv = L.triangularView<Eigen::Lower>().solve(Mat::Identity(E1.dim(), E1.dim()));
  const Mat M = Linv * E2.shape * Linv.transpose();
  const Vec v = L.transpose() * (E2.center - E1.center);
  if (v.squaredNorm() <= 1.0) return 0.0;

  const Eigen::SelfAdjointEigenSolver<Mat> eig(0.5 * (M + M.transpose()));
  const Vec lam = eig.eigenvalues();
  const Vec vh = eig.eigenvectors().transpose() * v;
  // u(mu) = (M + mu I)^{-1} M v, pick mu >= 0 with |u(mu)| = 1
  auto norm2 = [&](double mu) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
      const double c = lam[i] * vh[i] / (lam[i] + mu);
      s += c * c;
    }
    return s;
  };
  double lo = 0.0, hi = lam.maxCoeff() * v.norm();
  while (norm2(hi) > 1.0) hi *= 2.0;
  for (int k = 0; k < 200 && hi - lo > 1e-16 * hi; ++k) {
    const double mid = 0.5 * (lo + hi);
    (norm2(mid) > 1.0 ? lo : hi) = mid;
  }
  const double mu = 0.5 * (lo + hi);
  double value = 0.0;
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    const double r = mu / (lam[i] + mu);
    value += lam[i] * vh[i] * vh[i] * r * r;
  }
  return value;
}

bool ellipsoids_intersect(const Ellipsoid& E1, const Ellipsoid& E2) {
  return ellipsoid_separation(E1, E2) <= 1.0 + tolerances().ellipsoid_intersect;
}

bool open_ellipsoids_overlap(const Ellipsoid& E1, const Ellipsoid& E2) {
  return ellipsoid_separation(E1, E2) < 1.0 - tolerances().ellipsoid_intersect;
}

std::optional<Interval> ray_ellipsoid_interval(const Ellipsoid& E, const Vec& p, const Vec& dir) {
  if (dir.squaredNorm() == 0.0) throw InputError("direction is zero");
  const Vec r = p - E.center;
  const Vec Qd = E.shape * dir;
  const double a = dir.dot(Qd);
  const double b = 2.0 * r.dot(Qd);
  const double c = r.dot(E.shape * r) - 1.0;
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return std::nullopt;
  const double sq = std::sqrt(disc);
  // stable roots
  const double qq = -0.5 * (b + std::copysign(sq, b));
  double t1 = qq / a;
  double t2 = qq != 0.0 ? c / qq : -t1;
  if (t1 > t2) std::swap(t1, t2);
  return Interval{t1, t2};
}

}  // namespace depthcraft
