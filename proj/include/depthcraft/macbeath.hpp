#pragma once

#include "depthcraft/polytope.hpp"

#include <optional>

namespace depthcraft {

// Open ellipsoid {y : (y - center)^T shape (y - center) < 1}.
struct Ellipsoid {
  Vec center;
  Mat shape;

  int dim() const { return static_cast<int>(center.size()); }
  double quadratic(const Vec& y) const { return (y - center).dot(shape * (y - center)); }
  bool contains(const Vec& y) const { return quadratic(y) < 1.0; }
  double volume() const;
  // Same center, every semi-axis multiplied by `factor`.
  Ellipsoid scaled(double factor) const { return {center, shape / (factor * factor)}; }
};

double unit_ball_volume(int d);

// x + lambda((K - x) cap (x - K)) as the 2n rows |a_i.(y - x)| <= lambda (b_i - a_i.x).
struct MacbeathRegion {
  Vec base_point;
  double lambda;
  HPolytope body;
};

MacbeathRegion macbeath_region(const HPolytope& K, const Vec& x, double lambda);

struct MveeResult {
  Mat shape;  // {z : z^T shape z <= 1} encloses every +-point
  Vec weights;
  int iterations = 0;
  double residual = 0.0;  // max_i w_i / d - 1 at termination
};

// Minimum-volume origin-centered ellipsoid enclosing the points +-columns of P,
// by Khachiyan's coordinate ascent with away steps.
MveeResult symmetric_mvee(const Mat& points);

// Shape of the maximum-volume ellipsoid inscribed in the symmetric polytope
// {|p_i.z| <= 1} (points given as columns), scaled so it sits inside exactly.
Mat symmetric_mvie_shape(const Mat& points);

// Inner John ellipsoid of M^lambda(x). Its shape is that of lambda = 1
// divided by lambda^2.
Ellipsoid macbeath_ellipsoid(const HPolytope& K, const Vec& x, double lambda);

// min over the closed E1 of the E2 quadratic (0 when E2's center lies in E1).
// Closed ellipsoids meet iff this is <= 1.
double ellipsoid_separation(const Ellipsoid& E1, const Ellipsoid& E2);
// Closed-set convention: tangency counts as intersecting.
bool ellipsoids_intersect(const Ellipsoid& E1, const Ellipsoid& E2);
// Open ellipsoids share a point (tangency does not count).
bool open_ellipsoids_overlap(const Ellipsoid& E1, const Ellipsoid& E2);

std::optional<Interval> ray_ellipsoid_interval(const Ellipsoid& E, const Vec& p, const Vec& dir);

}  // namespace depthcraft
