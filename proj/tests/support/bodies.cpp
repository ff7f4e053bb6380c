#include "bodies.hpp"

#include "depthcraft/canonical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace testbodies {

using depthcraft::AffineMap;

HPolytope square() { return HPolytope::box(Vec::Constant(2, -0.5), Vec::Constant(2, 0.5)); }

HPolytope triangle() {
  Mat A(3, 2);
  A << -1, 0, 0, -1, 1, 1;
  Vec b(3);
  b << 0, 0, 1;
  return HPolytope(A, b);
}

HPolytope cube() { return HPolytope::box(Vec::Constant(3, -0.5), Vec::Constant(3, 0.5)); }

Vec random_vector(int d, std::mt19937_64& rng, double scale) {
  std::normal_distribution<double> g(0.0, scale);
  Vec v(d);
  for (int i = 0; i < d; ++i) v[i] = g(rng);
  return v;
}

Mat random_linear(int d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> s(0.5, 2.0);
  const Mat G = Mat::NullaryExpr(d, d, [&] { return std::normal_distribution<double>(0.0, 1.0)(rng); });
  const Eigen::HouseholderQR<Mat> qr1(G);
  const Mat U = qr1.householderQ();
  const Mat H = Mat::NullaryExpr(d, d, [&] { return std::normal_distribution<double>(0.0, 1.0)(rng); });
  const Eigen::HouseholderQR<Mat> qr2(H);
  const Mat V = qr2.householderQ();
  Vec sv(d);
  for (int i = 0; i < d; ++i) sv[i] = s(rng);
  return U * sv.asDiagonal() * V.transpose();
}

HPolytope regular_polygon(int n, double phase) {
  Mat A(n, 2);
  Vec b = Vec::Ones(n);
  for (int i = 0; i < n; ++i) {
    const double a = phase + 2.0 * std::numbers::pi * i / n;
    A(i, 0) = std::cos(a);
    A(i, 1) = std::sin(a);
  }
  return HPolytope(A, b);
}

HPolytope random_polygon(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
  std::vector<double> angles;
  for (;;) {
    angles.clear();
    for (int i = 0; i < n; ++i) angles.push_back(u(rng));
    std::sort(angles.begin(), angles.end());
    double gap = angles.front() + 2.0 * std::numbers::pi - angles.back();
    for (int i = 1; i < n; ++i) gap = std::max(gap, angles[i] - angles[i - 1]);
    if (gap < 0.9 * std::numbers::pi) break;
  }
  Mat A(n, 2);
  for (int i = 0; i < n; ++i) A.row(i) << std::cos(angles[i]), std::sin(angles[i]);
  const HPolytope K(A, Vec::Ones(n));
  return AffineMap(random_linear(2, rng), random_vector(2, rng)).apply(K);
}

HPolytope random_polytope3(int m, std::mt19937_64& rng) {
  for (;;) {
    Mat A(m, 3);
    for (int i = 0; i < m; ++i) A.row(i) = random_vector(3, rng).normalized().transpose();
    const HPolytope K(A, Vec::Ones(m));
    try {
      depthcraft::geom::polyhedron_from_halfspaces(K);
    } catch (const depthcraft::InputError&) {
      continue;
    }
    return AffineMap(random_linear(3, rng), random_vector(3, rng)).apply(K);
  }
}

Vec pt(double x, double y) {
  Vec v(2);
  v << x, y;
  return v;
}

Vec pt(double x, double y, double z) {
  Vec v(3);
  v << x, y, z;
  return v;
}

}  // namespace testbodies
