#pragma once

#include "depthcraft/common.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace depthcraft {

// Convex body {z : A z <= b}. Rows with a_i = 0 and b_i >= 0 are dropped at
// construction; a zero row with b_i < 0 makes the body empty and is rejected.
class HPolytope {
 public:
  HPolytope() = default;
  HPolytope(Mat A, Vec b);

  int dim() const { return static_cast<int>(A_.cols()); }
  Eigen::Index rows() const { return A_.rows(); }
  const Mat& A() const { return A_; }
  const Vec& b() const { return b_; }

  const std::optional<double>& cached_volume() const { return cached_volume_; }
  // Copy of this body carrying its volume (exact for d in {2,3}).
  HPolytope with_cached_volume() const;

  // Same body with every row scaled to a unit normal.
  HPolytope normalized() const;
  // Body with one extra row a.z <= c appended.
  HPolytope with_row(const Vec& a, double c) const;

  static HPolytope box(const Vec& lo, const Vec& hi);

 private:
  Mat A_;
  Vec b_;
  std::optional<double> cached_volume_;
};

struct Interval {
  double lo;
  double hi;
  double length() const { return hi - lo; }
};

// y = linear * x + offset
class AffineMap {
 public:
  AffineMap() = default;
  AffineMap(Mat linear, Vec offset);

  static AffineMap identity(int d);
  static AffineMap scaling(int d, double s);

  int dim() const { return static_cast<int>(linear_.rows()); }
  const Mat& linear() const { return linear_; }
  const Vec& offset() const { return offset_; }

  Vec apply(const Vec& x) const { return linear_ * x + offset_; }
  Vec apply_linear(const Vec& v) const { return linear_ * v; }
  HPolytope apply(const HPolytope& K) const;

  // (this o other)(x) = this(other(x))
  AffineMap compose(const AffineMap& other) const;
  AffineMap inverse() const;
  double determinant() const { return linear_.determinant(); }

 private:
  Mat linear_;
  Vec offset_;
};

bool contains(const HPolytope& K, const Vec& x, double tol = 0.0);
// Strict interior test: every slack b_i - a_i.x is positive.
bool interior_contains(const HPolytope& K, const Vec& x);

// Parameter interval of {p + t dir} inside int K; nullopt when the line misses
// the interior. Throws InputError if the interval is unbounded.
std::optional<Interval> clip_line(const HPolytope& K, const Vec& p, const Vec& dir);

double volume(const HPolytope& K);
// |K cap {z : a.z >= c}|
double cap_volume(const HPolytope& K, const Vec& a, double c);

// Distance from x to bK along the ray from o through x.
double ray_length(const HPolytope& K, const Vec& x);
// Euclidean distance from x to bK.
double boundary_distance(const HPolytope& K, const Vec& x);

// Largest ball inside K. radius <= 0 means K has empty interior.
struct Ball {
  Vec center;
  double radius;
};
Ball chebyshev_ball(const HPolytope& K);

// Axis-aligned bounding box (exact via vertices for d <= 3).
std::pair<Vec, Vec> bounding_box(const HPolytope& K);
Vec centroid(const HPolytope& K);

// Uniform points in K by bounding-box rejection.
class UniformSampler {
 public:
  explicit UniformSampler(const HPolytope& K);
  Vec operator()(std::mt19937_64& rng) const;

 private:
  HPolytope body_;
  Vec lo_, hi_;
};

namespace geom {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;

// Counts comparator calls made while sorting halfplanes by normal angle.
struct SortStats {
  std::uint64_t comparisons = 0;
};

// Convex polygon from halfplanes: vertices in counter-clockwise order; edge i
// runs from vertices[i] to vertices[i+1] and lies on the halfplane line
// `row_of_edge[i]` of the input. Edges are ordered by outer-normal angle in
// [0, 2pi). Redundant halfplanes and zero-length edges are removed.
struct Polygon {
  std::vector<Vec2> vertices;
  std::vector<Eigen::Index> row_of_edge;
};
Polygon polygon_from_halfplanes(const HPolytope& K, SortStats* stats = nullptr);

double shoelace(const std::vector<Vec2>& pts);  // signed, CCW positive
double polygon_cap_area(const std::vector<Vec2>& ccw, const Vec2& a, double c);

// Convex polyhedron with faces as vertex-index cycles, counter-clockwise when
// seen from outside.
struct Polyhedron {
  std::vector<Vec3> vertices;
  std::vector<std::vector<int>> faces;
  std::vector<Vec3> face_normals;
};
Polyhedron polyhedron_from_halfspaces(const HPolytope& K);
double polyhedron_volume(const Polyhedron& P);
double polyhedron_cap_volume(const Polyhedron& P, const Vec3& a, double c);

// Evaluates |K cap {a.z >= c}| repeatedly on one body (d in {2,3}).
class CapEvaluator {
 public:
  explicit CapEvaluator(const HPolytope& K);
  int dim() const { return dim_; }
  double total() const { return total_; }
  double operator()(const Vec& a, double c) const;
  const std::vector<Vec2>& polygon() const { return polygon_; }
  const Polyhedron& polyhedron() const { return polyhedron_; }

 private:
  int dim_;
  double total_ = 0.0;
  std::vector<Vec2> polygon_;
  Polyhedron polyhedron_;
};

}  // namespace geom

}  // namespace depthcraft
