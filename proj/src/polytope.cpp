#include "depthcraft/polytope.hpp"

#include "barrier_lp.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>

namespace depthcraft {

const Tolerances& tolerances() {
  static const Tolerances kDefaults{};
  return kDefaults;
}

// ---------------------------------------------------------------------------
// HPolytope

HPolytope::HPolytope(Mat A, Vec b) {
  if (A.cols() < 1) throw InputError("polytope dimension must be positive");
  if (A.rows() != b.size()) throw InputError("row count of A does not match length of b");
  if (!A.allFinite() || !b.allFinite()) throw InputError("polytope contains NaN or Inf");

  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    if (A.row(i).squaredNorm() > 0.0) {
      keep.push_back(i);
    } else if (b[i] < 0.0) {
      throw InputError("zero row with negative right-hand side: body is empty");
    }
  }
  A_.resize(static_cast<Eigen::Index>(keep.size()), A.cols());
  b_.resize(static_cast<Eigen::Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) {
    A_.row(static_cast<Eigen::Index>(k)) = A.row(keep[k]);
    b_[static_cast<Eigen::Index>(k)] = b[keep[k]];
  }
}

HPolytope HPolytope::with_cached_volume() const {
  HPolytope out = *this;
  if (dim() <= 3) out.cached_volume_ = volume(*this);
  return out;
}

HPolytope HPolytope::normalized() const {
  Mat A = A_;
  Vec b = b_;
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    const double n = A.row(i).norm();
    A.row(i) /= n;
    b[i] /= n;
  }
  HPolytope out(std::move(A), std::move(b));
  out.cached_volume_ = cached_volume_;
  return out;
}

HPolytope HPolytope::with_row(const Vec& a, double c) const {
  Mat A(A_.rows() + 1, A_.cols());
  Vec b(b_.size() + 1);
  A.topRows(A_.rows()) = A_;
  A.row(A_.rows()) = a.transpose();
  b.head(b_.size()) = b_;
  b[b_.size()] = c;
  return HPolytope(std::move(A), std::move(b));
}

HPolytope HPolytope::box(const Vec& lo, const Vec& hi) {
  const Eigen::Index d = lo.size();
  Mat A = Mat::Zero(2 * d, d);
  Vec b(2 * d);
  for (Eigen::Index k = 0; k < d; ++k) {
    A(2 * k, k) = 1.0;
    b[2 * k] = hi[k];
    A(2 * k + 1, k) = -1.0;
    b[2 * k + 1] = -lo[k];
  }
  return HPolytope(std::move(A), std::move(b));
}

// ---------------------------------------------------------------------------
// AffineMap

AffineMap::AffineMap(Mat linear, Vec offset) : linear_(std::move(linear)), offset_(std::move(offset)) {
  if (linear_.rows() != linear_.cols() || linear_.rows() != offset_.size())
    throw InputError("affine map dimensions are inconsistent");
  if (linear_.determinant() == 0.0) throw InputError("affine map is singular");
}

AffineMap AffineMap::identity(int d) { return AffineMap(Mat::Identity(d, d), Vec::Zero(d)); }

AffineMap AffineMap::scaling(int d, double s) {
  return AffineMap(s * Mat::Identity(d, d), Vec::Zero(d));
}

HPolytope AffineMap::apply(const HPolytope& K) const {
  // a.x <= b with x = L^{-1}(y - o)  =>  (a L^{-1}).y <= b + (a L^{-1}).o
  const Mat Ainv = K.A() * linear_.inverse();
  Vec b = K.b() + Ainv * offset_;
  return HPolytope(Ainv, std::move(b));
}

AffineMap AffineMap::compose(const AffineMap& other) const {
  return AffineMap(linear_ * other.linear_, linear_ * other.offset_ + offset_);
}

AffineMap AffineMap::inverse() const {
  const Mat inv = linear_.inverse();
  return AffineMap(inv, -inv * offset_);
}

// ---------------------------------------------------------------------------
// Predicates and line clipping

namespace {

void check_dim(const HPolytope& K, const Vec& x) {
  if (x.size() != K.dim()) throw InputError("point dimension does not match polytope dimension");
}

}  // namespace

bool contains(const HPolytope& K, const Vec& x, double tol) {
  check_dim(K, x);
  return ((K.A() * x - K.b()).array() <= tol).all();
}

bool interior_contains(const HPolytope& K, const Vec& x) {
  check_dim(K, x);
  return ((K.A() * x - K.b()).array() < 0.0).all();
}

std::optional<Interval> clip_line(const HPolytope& K, const Vec& p, const Vec& dir) {
  check_dim(K, p);
  check_dim(K, dir);
  const double dnorm = dir.norm();
  if (dnorm == 0.0) throw InputError("clip_line direction is zero");
  const double eps = tolerances().parallel;
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < K.rows(); ++i) {
    const auto a = K.A().row(i);
    const double ad = a.dot(dir);
    const double slack = K.b()[i] - a.dot(p);
    if (std::abs(ad) <= eps * a.norm() * dnorm) {
      if (slack <= 0.0) return std::nullopt;
      continue;
    }
    const double t = slack / ad;
    if (ad > 0.0)
      hi = std::min(hi, t);
    else
      lo = std::max(lo, t);
  }
  if (lo >= hi) return std::nullopt;
  if (!std::isfinite(lo) || !std::isfinite(hi))
    throw InputError("line meets the body in an unbounded interval");
  return Interval{lo, hi};
}

double ray_length(const HPolytope& K, const Vec& x) {
  check_dim(K, x);
  const double n = x.norm();
  if (n == 0.0) throw DomainError("ray_length is undefined at the origin");
  const auto iv = clip_line(K, Vec::Zero(K.dim()), x);
  if (!iv || iv->lo >= 0.0) throw DomainError("origin is not an interior point");
  if (iv->hi < 1.0 - 1e-12) throw DomainError("point lies outside the body");
  return std::max(0.0, (iv->hi - 1.0) * n);
}

double boundary_distance(const HPolytope& K, const Vec& x) {
  if (!contains(K, x)) throw DomainError("point lies outside the body");
  double best = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < K.rows(); ++i)
    best = std::min(best, (K.b()[i] - K.A().row(i).dot(x)) / K.A().row(i).norm());
  return best;
}

// ---------------------------------------------------------------------------
// Chebyshev ball and bounding boxes

namespace {

double rhs_scale(const HPolytope& K) {
  return 1.0 + (K.rows() > 0 ? K.b().cwiseAbs().maxCoeff() : 0.0);
}

// K intersected with a huge box so that the LPs below stay bounded.
void guarded_system(const HPolytope& K, Mat& A, Vec& b) {
  const int d = K.dim();
  const double big = 1e6 * rhs_scale(K);
  A.resize(K.rows() + 2 * d, d);
  b.resize(K.rows() + 2 * d);
  A.topRows(K.rows()) = K.A();
  b.head(K.rows()) = K.b();
  for (int k = 0; k < d; ++k) {
    A.row(K.rows() + 2 * k) = Vec::Unit(d, k).transpose();
    A.row(K.rows() + 2 * k + 1) = -Vec::Unit(d, k).transpose();
    b[K.rows() + 2 * k] = big;
    b[K.rows() + 2 * k + 1] = big;
  }
}

}  // namespace

Ball chebyshev_ball(const HPolytope& K) {
  const int d = K.dim();
  Mat G;
  Vec h;
  guarded_system(K, G, h);
  // variables (x, r): a_i.x + r |a_i| <= b_i
  Mat A(G.rows(), d + 1);
  A.leftCols(d) = G;
  for (Eigen::Index i = 0; i < G.rows(); ++i) A(i, d) = G.row(i).norm();
  Vec x0 = Vec::Zero(d + 1);
  double r0 = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < G.rows(); ++i) r0 = std::min(r0, h[i] / A(i, d));
  x0[d] = r0 - 1.0;
  Vec c = Vec::Zero(d + 1);
  c[d] = 1.0;
  const Vec sol = detail::barrier_lp(A, h, c, x0, 1e-12);
  return Ball{sol.head(d), sol[d]};
}

std::pair<Vec, Vec> bounding_box(const HPolytope& K) {
  const int d = K.dim();
  Vec lo(d), hi(d);
  if (d == 2) {
    const auto poly = geom::polygon_from_halfplanes(K);
    lo.setConstant(std::numeric_limits<double>::infinity());
    hi.setConstant(-std::numeric_limits<double>::infinity());
    for (const auto& v : poly.vertices) {
      lo = lo.cwiseMin(Vec(v));
      hi = hi.cwiseMax(Vec(v));
    }
    return {lo, hi};
  }
  if (d == 3) {
    const auto P = geom::polyhedron_from_halfspaces(K);
    lo.setConstant(std::numeric_limits<double>::infinity());
    hi.setConstant(-std::numeric_limits<double>::infinity());
    for (const auto& v : P.vertices) {
      lo = lo.cwiseMin(Vec(v));
      hi = hi.cwiseMax(Vec(v));
    }
    return {lo, hi};
  }
  const Ball ball = chebyshev_ball(K);
  if (ball.radius <= 0.0) throw InputError("polytope has empty interior");
  for (int k = 0; k < d; ++k) {
    const Vec e = Vec::Unit(d, k);
    hi[k] = detail::barrier_lp(K.A(), K.b(), e, ball.center, 1e-12)[k];
    lo[k] = detail::barrier_lp(K.A(), K.b(), -e, ball.center, 1e-12)[k];
  }
  return {lo, hi};
}

UniformSampler::UniformSampler(const HPolytope& K) : body_(K) {
  std::tie(lo_, hi_) = bounding_box(K);
}

Vec UniformSampler::operator()(std::mt19937_64& rng) const {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Vec x(lo_.size());
  for (;;) {
    for (Eigen::Index k = 0; k < x.size(); ++k) x[k] = lo_[k] + (hi_[k] - lo_[k]) * unit(rng);
    if (interior_contains(body_, x)) return x;
  }
}

// ---------------------------------------------------------------------------
// Volume

namespace {

double monte_carlo_fraction(const HPolytope& K, const Vec* a, double c, double& box_volume) {
  const auto [lo, hi] = bounding_box(K);
  box_volume = (hi - lo).prod();
  std::mt19937_64 rng(0x5eedu);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const long n = tolerances().monte_carlo_samples;
  long hits = 0;
  Vec x(lo.size());
  for (long s = 0; s < n; ++s) {
    for (Eigen::Index k = 0; k < x.size(); ++k) x[k] = lo[k] + (hi[k] - lo[k]) * unit(rng);
    if (contains(K, x) && (a == nullptr || a->dot(x) >= c)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(n);
}

std::pair<double, double> interval_1d(const HPolytope& K) {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < K.rows(); ++i) {
    const double a = K.A()(i, 0);
    if (a > 0) hi = std::min(hi, K.b()[i] / a);
    else lo = std::max(lo, K.b()[i] / a);
  }
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw InputError("polytope is unbounded");
  return {lo, hi};
}

}  // namespace

double volume(const HPolytope& K) {
  if (K.cached_volume()) return *K.cached_volume();
  switch (K.dim()) {
    case 1: {
      const auto [lo, hi] = interval_1d(K);
      return std::max(0.0, hi - lo);
    }
    case 2:
      return geom::shoelace(geom::polygon_from_halfplanes(K).vertices);
    case 3:
      return geom::polyhedron_volume(geom::polyhedron_from_halfspaces(K));
    default: {
      double box = 0.0;
      const double frac = monte_carlo_fraction(K, nullptr, 0.0, box);
      return frac * box;
    }
  }
}

double cap_volume(const HPolytope& K, const Vec& a, double c) {
  check_dim(K, a);
  switch (K.dim()) {
    case 1: {
      const auto [lo, hi] = interval_1d(K);
      if (a[0] == 0.0) return c <= 0.0 ? hi - lo : 0.0;
      const double t = c / a[0];
      return a[0] > 0 ? std::max(0.0, hi - std::max(lo, t)) : std::max(0.0, std::min(hi, t) - lo);
    }
    case 2:
    case 3:
      return geom::CapEvaluator(K)(a, c);
    default: {
      double box = 0.0;
      const double frac = monte_carlo_fraction(K, &a, c, box);
      return frac * box;
    }
  }
}

Vec centroid(const HPolytope& K) {
  if (K.dim() == 2) {
    const auto v = geom::polygon_from_halfplanes(K).vertices;
    double area2 = 0.0;
    geom::Vec2 acc = geom::Vec2::Zero();
    for (std::size_t i = 0; i < v.size(); ++i) {
      const auto& p = v[i];
      const auto& q = v[(i + 1) % v.size()];
      const double cr = (p - v[0]).x() * (q - v[0]).y() - (p - v[0]).y() * (q - v[0]).x();
      area2 += cr;
      acc += cr * (p + q + v[0]) / 3.0;
    }
    return Vec(acc / area2);
  }
  if (K.dim() == 3) {
    const auto P = geom::polyhedron_from_halfspaces(K);
    geom::Vec3 ref = geom::Vec3::Zero();
    for (const auto& v : P.vertices) ref += v;
    ref /= static_cast<double>(P.vertices.size());
    double vol = 0.0;
    geom::Vec3 acc = geom::Vec3::Zero();
    for (const auto& f : P.faces) {
      for (std::size_t i = 1; i + 1 < f.size(); ++i) {
        const auto& a = P.vertices[f[0]];
        const auto& b = P.vertices[f[i]];
        const auto& c = P.vertices[f[i + 1]];
        const double v6 = (a - ref).dot((b - ref).cross(c - ref));
        vol += v6;
        acc += v6 * (a + b + c + ref) / 4.0;
      }
    }
    return Vec(acc / vol);
  }
  if (K.dim() == 1) {
    const auto [lo, hi] = interval_1d(K);
    return Vec::Constant(1, 0.5 * (lo + hi));
  }
  throw InputError("centroid is implemented for d <= 3");
}

// ---------------------------------------------------------------------------
// Planar geometry

namespace geom {

namespace {

double cross2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

struct Line {
  Vec2 n;  // unit outer normal
  double c;
  double angle;  // of n, in [0, 2pi)
  Eigen::Index row;
};

Vec2 intersect(const Line& p, const Line& q) {
  const double det = p.n.x() * q.n.y() - p.n.y() * q.n.x();
  return Vec2((p.c * q.n.y() - q.c * p.n.y()) / det, (p.n.x() * q.c - q.n.x() * p.c) / det);
}

}  // namespace

Polygon polygon_from_halfplanes(const HPolytope& K, SortStats* stats) {
  if (K.dim() != 2) throw InputError("polygon_from_halfplanes needs a planar body");
  if (K.rows() < 3) throw InputError("polygon is unbounded (fewer than 3 halfplanes)");
  const double two_pi = 2.0 * std::numbers::pi;

  std::vector<Line> lines;
  lines.reserve(static_cast<std::size_t>(K.rows()));
  double scale = 1.0;
  for (Eigen::Index i = 0; i < K.rows(); ++i) {
    const Vec2 a = K.A().row(i).transpose();
    const double norm = a.norm();
    Line L{a / norm, K.b()[i] / norm, 0.0, i};
    L.angle = std::atan2(L.n.y(), L.n.x());
    if (L.angle < 0.0) L.angle += two_pi;
    if (L.angle >= two_pi) L.angle -= two_pi;
    scale = std::max(scale, std::abs(L.c));
    lines.push_back(L);
  }

  std::uint64_t comparisons = 0;
  std::sort(lines.begin(), lines.end(), [&comparisons](const Line& p, const Line& q) {
    ++comparisons;
    if (p.angle != q.angle) return p.angle < q.angle;
    if (p.c != q.c) return p.c < q.c;
    return p.row < q.row;
  });
  if (stats) stats->comparisons += comparisons;

  // keep only the tightest of equal-direction halfplanes
  std::vector<Line> unique;
  for (const auto& L : lines) {
    if (!unique.empty() && std::abs(L.angle - unique.back().angle) <= 1e-15) continue;
    unique.push_back(L);
  }

  for (std::size_t i = 0; i < unique.size(); ++i) {
    const double next = i + 1 < unique.size() ? unique[i + 1].angle : unique[0].angle + two_pi;
    if (next - unique[i].angle >= std::numbers::pi - 1e-12)
      throw InputError("polygon is unbounded");
  }

  const double eps = 1e-12 * scale;
  auto outside = [eps](const Line& L, const Vec2& p) { return L.n.dot(p) > L.c + eps; };
  auto turns_left = [](const Line& p, const Line& q) { return cross2(p.n, q.n) > 0.0; };

  std::deque<Line> dq;
  for (const auto& L : unique) {
    while (dq.size() >= 2 && outside(L, intersect(dq[dq.size() - 2], dq.back()))) dq.pop_back();
    while (dq.size() >= 2 && outside(L, intersect(dq[0], dq[1]))) dq.pop_front();
    if (!dq.empty() && !turns_left(dq.back(), L)) throw InputError("polygon is empty");
    dq.push_back(L);
  }
  while (dq.size() >= 3 && outside(dq.front(), intersect(dq[dq.size() - 2], dq.back()))) dq.pop_back();
  while (dq.size() >= 3 && outside(dq.back(), intersect(dq[0], dq[1]))) dq.pop_front();
  if (dq.size() < 3 || !turns_left(dq.back(), dq.front())) throw InputError("polygon is empty");

  const std::size_t k = dq.size();
  std::vector<Vec2> start(k);
  for (std::size_t i = 0; i < k; ++i) start[i] = intersect(dq[(i + k - 1) % k], dq[i]);

  Polygon poly;
  const double merge = tolerances().vertex_merge * scale;
  for (std::size_t i = 0; i < k; ++i) {
    const Vec2& end = start[(i + 1) % k];
    if ((end - start[i]).norm() <= merge) continue;  // zero-length edge
    poly.vertices.push_back(start[i]);
    poly.row_of_edge.push_back(dq[i].row);
  }
  if (poly.vertices.size() < 3 || shoelace(poly.vertices) <= 0.0)
    throw InputError("polygon has empty interior");
  return poly;
}

double shoelace(const std::vector<Vec2>& pts) {
  if (pts.size() < 3) return 0.0;
  const Vec2& o = pts[0];
  double area2 = 0.0;
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) area2 += cross2(pts[i] - o, pts[i + 1] - o);
  return 0.5 * area2;
}

double polygon_cap_area(const std::vector<Vec2>& ccw, const Vec2& a, double c) {
  const std::size_t n = ccw.size();
  double area2 = 0.0;
  bool have = false;
  Vec2 first, prev;
  auto emit = [&](const Vec2& p) {
    if (!have) {
      first = p;
      prev = p;
      have = true;
    } else {
      area2 += cross2(prev - first, p - first);
      prev = p;
    }
  };
  double fc = a.dot(ccw[0]) - c;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& cur = ccw[i];
    const Vec2& nxt = ccw[(i + 1) % n];
    const double fn = a.dot(nxt) - c;
    if (fc >= 0.0) emit(cur);
    if ((fc >= 0.0) != (fn >= 0.0)) emit(cur + (fc / (fc - fn)) * (nxt - cur));
    fc = fn;
  }
  return 0.5 * area2;
}

// ---------------------------------------------------------------------------
// Polyhedra

Polyhedron polyhedron_from_halfspaces(const HPolytope& K) {
  if (K.dim() != 3) throw InputError("polyhedron_from_halfspaces needs a 3D body");
  const HPolytope N = K.normalized();
  const Eigen::Index m = N.rows();
  std::vector<Vec3> n(static_cast<std::size_t>(m));
  std::vector<double> c(static_cast<std::size_t>(m));
  double scale = 1.0;
  for (Eigen::Index i = 0; i < m; ++i) {
    n[i] = N.A().row(i).transpose();
    c[i] = N.b()[i];
    scale = std::max(scale, std::abs(c[i]));
  }

  // bounded iff no nonzero u with n_i.u <= 0 for all i; extreme rays of that
  // cone lie on two of the hyperplanes n_i.u = 0
  bool any_pair = false;
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = i + 1; j < m; ++j) {
      Vec3 u = n[i].cross(n[j]);
      if (u.norm() < 1e-12) continue;
      any_pair = true;
      u.normalize();
      for (double sgn : {1.0, -1.0}) {
        bool ray = true;
        for (Eigen::Index k = 0; k < m && ray; ++k)
          if (sgn * n[k].dot(u) > 1e-12) ray = false;
        if (ray) throw InputError("polyhedron is unbounded");
      }
    }
  }
  if (!any_pair) throw InputError("polyhedron is unbounded");

  const double feas = tolerances().vertex_feasibility * scale;
  const double merge = tolerances().vertex_merge * scale * 10.0;
  Polyhedron P;
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = i + 1; j < m; ++j) {
      for (Eigen::Index k = j + 1; k < m; ++k) {
        Eigen::Matrix3d M;
        M.row(0) = n[i].transpose();
        M.row(1) = n[j].transpose();
        M.row(2) = n[k].transpose();
        if (std::abs(M.determinant()) < 1e-12) continue;
        const Vec3 v = M.partialPivLu().solve(Vec3(c[i], c[j], c[k]));
        bool ok = true;
        for (Eigen::Index l = 0; l < m && ok; ++l)
          if (n[l].dot(v) > c[l] + feas) ok = false;
        if (!ok) continue;
        bool dup = false;
        for (const auto& w : P.vertices)
          if ((w - v).norm() <= merge) {
            dup = true;
            break;
          }
        if (!dup) P.vertices.push_back(v);
      }
    }
  }
  if (P.vertices.size() < 4) throw InputError("polyhedron has empty interior");

  for (Eigen::Index i = 0; i < m; ++i) {
    bool seen = false;
    for (Eigen::Index j = 0; j < i && !seen; ++j)
      if ((n[j] - n[i]).norm() < 1e-12 && std::abs(c[j] - c[i]) < feas) seen = true;
    if (seen) continue;
    std::vector<int> on;
    for (std::size_t v = 0; v < P.vertices.size(); ++v)
      if (std::abs(n[i].dot(P.vertices[v]) - c[i]) <= feas) on.push_back(static_cast<int>(v));
    if (on.size() < 3) continue;
    Vec3 g = Vec3::Zero();
    for (int v : on) g += P.vertices[v];
    g /= static_cast<double>(on.size());
    Vec3 e1 = n[i].unitOrthogonal();
    Vec3 e2 = n[i].cross(e1);
    std::vector<std::pair<double, int>> order;
    for (int v : on) {
      const Vec3 r = P.vertices[v] - g;
      order.emplace_back(std::atan2(e2.dot(r), e1.dot(r)), v);
    }
    std::sort(order.begin(), order.end());
    std::vector<int> face;
    for (const auto& [ang, v] : order) face.push_back(v);
    P.faces.push_back(std::move(face));
    P.face_normals.push_back(n[i]);
  }
  if (polyhedron_volume(P) <= 0.0) throw InputError("polyhedron has empty interior");
  return P;
}

double polyhedron_volume(const Polyhedron& P) {
  Vec3 ref = Vec3::Zero();
  for (const auto& v : P.vertices) ref += v;
  ref /= static_cast<double>(P.vertices.size());
  double v6 = 0.0;
  for (const auto& f : P.faces)
    for (std::size_t i = 1; i + 1 < f.size(); ++i)
      v6 += (P.vertices[f[0]] - ref).dot((P.vertices[f[i]] - ref).cross(P.vertices[f[i + 1]] - ref));
  return v6 / 6.0;
}

double polyhedron_cap_volume(const Polyhedron& P, const Vec3& a, double c) {
  // Tetrahedra from a reference point on the cutting plane: the cut face
  // contributes nothing, so only clipped boundary faces are summed.
  const Vec3 p0 = a * (c / a.squaredNorm());
  double v6 = 0.0;
  for (const auto& f : P.faces) {
    bool have_first = false, have_prev = false;
    Vec3 first, prev;
    auto emit = [&](const Vec3& p) {
      const Vec3 r = p - p0;
      if (!have_first) {
        first = r;
        have_first = true;
      } else if (!have_prev) {
        prev = r;
        have_prev = true;
      } else {
        v6 += first.dot(prev.cross(r));
        prev = r;
      }
    };
    const std::size_t k = f.size();
    double fc = a.dot(P.vertices[f[0]]) - c;
    for (std::size_t i = 0; i < k; ++i) {
      const Vec3& cur = P.vertices[f[i]];
      const Vec3& nxt = P.vertices[f[(i + 1) % k]];
      const double fn = a.dot(nxt) - c;
      if (fc >= 0.0) emit(cur);
      if ((fc >= 0.0) != (fn >= 0.0)) emit(cur + (fc / (fc - fn)) * (nxt - cur));
      fc = fn;
    }
  }
  return v6 / 6.0;
}

CapEvaluator::CapEvaluator(const HPolytope& K) : dim_(K.dim()) {
  if (dim_ == 2) {
    polygon_ = polygon_from_halfplanes(K).vertices;
    total_ = shoelace(polygon_);
  } else if (dim_ == 3) {
    polyhedron_ = polyhedron_from_halfspaces(K);
    total_ = polyhedron_volume(polyhedron_);
  } else {
    throw InputError("exact cap volumes are implemented for d in {2,3}");
  }
}

double CapEvaluator::operator()(const Vec& a, double c) const {
  if (dim_ == 2) return polygon_cap_area(polygon_, Vec2(a[0], a[1]), c);
  return polyhedron_cap_volume(polyhedron_, Vec3(a[0], a[1], a[2]), c);
}

}  // namespace geom

}  // namespace depthcraft
