#include "depthcraft/canonical.hpp"

#include "mvie_barrier.hpp"

namespace depthcraft {

InscribedEllipsoid max_inscribed_ellipsoid(const HPolytope& K) {
  const HPolytope N = K.normalized();
  const Ball ball = chebyshev_ball(N);
  if (!(ball.radius > 0.0)) throw InputError("polytope has empty interior");
  const auto sol = detail::solve_mvie(N.A(), N.b(), ball.center, ball.radius, false);
  return InscribedEllipsoid{sol.center, sol.factor, sol.gap, sol.newton_steps};
}

CanonicalForm canonicalize(const HPolytope& K) {
  const int d = K.dim();
  const InscribedEllipsoid E = max_inscribed_ellipsoid(K);
  const double target = 1.0 / (2.0 * d);
  const Mat Linv = E.factor.triangularView<Eigen::Lower>().solve(Mat::Identity(d, d));
  AffineMap map(target * Linv, -target * (Linv * E.center));

  CanonicalForm out{map, map.apply(K).normalized().with_cached_volume(), Vec(), 0.0, 0.0};
  const InscribedEllipsoid check = max_inscribed_ellipsoid(out.body);
  out.john_center = check.center;
  const Eigen::JacobiSVD<Mat> svd(check.factor);
  const double smax = svd.singularValues().maxCoeff();
  const double smin = svd.singularValues().minCoeff();
  out.john_radius_check = smax / target;
  out.john_eccentricity = smax / smin;
  return out;
}

}  // namespace depthcraft
