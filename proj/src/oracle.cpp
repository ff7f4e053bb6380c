#include "depthcraft/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <random>

namespace depthcraft {

namespace {

constexpr double kGolden = 0.6180339887498949;

// Golden-section search for a minimum of f on [a, b]; returns the smallest
// value actually evaluated and its abscissa.
template <class F>
std::pair<double, double> golden_min(F&& f, double a, double b, int rounds) {
  double x1 = b - kGolden * (b - a);
  double x2 = a + kGolden * (b - a);
  double f1 = f(x1), f2 = f(x2);
  double best = std::min(f1, f2), arg = f1 <= f2 ? x1 : x2;
  for (int r = 0; r < rounds; ++r) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGolden * (b - a);
      f1 = f(x1);
      if (f1 < best) best = f1, arg = x1;
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGolden * (b - a);
      f2 = f(x2);
      if (f2 < best) best = f2, arg = x2;
    }
  }
  return {best, arg};
}

std::vector<Vec> planar_net(int n) {
  std::vector<Vec> dirs(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double a = 2.0 * std::numbers::pi * k / n;
    dirs[k] = Vec(2);
    dirs[k] << std::cos(a), std::sin(a);
  }
  return dirs;
}

std::vector<Vec> fibonacci_sphere(int n) {
  std::vector<Vec> dirs(static_cast<std::size_t>(n));
  const double phi = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int k = 0; k < n; ++k) {
    const double z = 1.0 - (2.0 * k + 1.0) / n;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    dirs[k] = Vec(3);
    dirs[k] << r * std::cos(phi * k), r * std::sin(phi * k), z;
  }
  return dirs;
}

}  // namespace

DepthOracle::DepthOracle(const HPolytope& K, OracleConfig cfg) : body_(K), cfg_(cfg), caps_(K) {
  const int d = K.dim();
  if (cfg_.coarse_directions <= 0) cfg_.coarse_directions = d == 2 ? 4096 : 20000;
  if (cfg_.refine_rounds < 0 || cfg_.refine_best < 0 || !(cfg_.tol > 0.0))
    throw InputError("oracle configuration must be positive");
  if (d == 2) {
    directions_ = planar_net(cfg_.coarse_directions);
    coarse_step_ = 2.0 * std::numbers::pi / cfg_.coarse_directions;
  } else {
    directions_ = fibonacci_sphere(cfg_.coarse_directions);
    coarse_step_ = std::sqrt(4.0 * std::numbers::pi / cfg_.coarse_directions);
  }
}

double DepthOracle::cap_fraction(const Vec& v, const Vec& q) const {
  return caps_(v, v.dot(q)) / caps_.total();
}

double DepthOracle::refine_planar(double angle, double step, const Vec& q) const {
  auto f = [&](double a) {
    Vec v(2);
    v << std::cos(a), std::sin(a);
    return cap_fraction(v, q);
  };
  return golden_min(f, angle - step, angle + step, cfg_.refine_rounds).first;
}

double DepthOracle::refine_spatial(const Vec& v0, double step, const Vec& q) const {
  Vec v = v0;
  double best = cap_fraction(v, q);
  double h = step;
  for (int r = 0; r < cfg_.refine_rounds; ++r) {
    const Vec e1 = Eigen::Vector3d(v[0], v[1], v[2]).unitOrthogonal();
    const Vec e2 = Eigen::Vector3d(v[0], v[1], v[2]).cross(Eigen::Vector3d(e1[0], e1[1], e1[2]));
    for (const Vec& e : {e1, e2}) {
      auto f = [&](double s) { return cap_fraction((v + s * e).normalized(), q); };
      const auto [val, arg] = golden_min(f, -h, h, 24);
      if (val < best) {
        best = val;
        v = (v + arg * e).normalized();
      }
    }
    h *= 0.6;
  }
  return best;
}

double DepthOracle::depth(const Vec& q) const {
  if (q.size() != body_.dim()) throw InputError("query dimension does not match polytope dimension");
  if (!interior_contains(body_, q)) return 0.0;

  const std::size_t n = directions_.size();
  std::vector<double> values(n);
  for (std::size_t k = 0; k < n; ++k) values[k] = cap_fraction(directions_[k], q);
  std::vector<std::size_t> order(n);
  for (std::size_t k = 0; k < n; ++k) order[k] = k;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b] || (values[a] == values[b] && a < b); });

  double best = values[order[0]];
  // refine the best coarse directions that are not neighbours of one already taken
  std::vector<std::size_t> picked;
  const double min_sep = 3.0 * coarse_step_;
  for (std::size_t idx : order) {
    if (static_cast<int>(picked.size()) >= cfg_.refine_best) break;
    bool close = false;
    for (std::size_t p : picked)
      if ((directions_[idx] - directions_[p]).norm() < min_sep) close = true;
    if (close) continue;
    picked.push_back(idx);
    if (body_.dim() == 2) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(idx) / static_cast<double>(n);
      best = std::min(best, refine_planar(angle, coarse_step_, q));
    } else {
      best = std::min(best, refine_spatial(directions_[idx], coarse_step_, q));
    }
  }
  return std::clamp(best, 0.0, 1.0);
}

double oracle_depth(const HPolytope& K, const Vec& q, const OracleConfig& cfg) {
  if (K.dim() != 2 && K.dim() != 3) throw InputError("the depth oracle supports d in {2,3}");
  if (q.size() != K.dim()) throw InputError("query dimension does not match polytope dimension");
  if (!contains(K, q)) return 0.0;
  return DepthOracle(K, cfg).depth(q);
}

bool in_dtr(const HPolytope& K, const Vec& q, double delta, const OracleConfig& cfg) {
  if (delta <= 0.0) {
    if (q.size() != K.dim()) throw InputError("query dimension does not match polytope dimension");
    return contains(K, q);
  }
  return oracle_depth(K, q, cfg) >= delta - cfg.tol;
}

DeepestPoint deepest_point(const HPolytope& K, const OracleConfig& cfg, std::uint64_t seed,
                           DepthFunction depth) {
  const int d = K.dim();
  if (d != 2 && d != 3) throw InputError("deepest_point supports d in {2,3}");
  // without a supplied evaluator the starts run on a coarse net and only the
  // final polish uses the full oracle
  std::optional<DepthOracle> oracle, coarse;
  DepthFunction polish = depth;
  if (!depth) {
    oracle.emplace(K, cfg);
    OracleConfig quick = cfg;
    quick.coarse_directions = d == 2 ? 256 : 2000;
    quick.refine_best = 2;
    quick.refine_rounds = 20;
    coarse.emplace(K, quick);
    depth = [&coarse](const Vec& x) { return coarse->depth(x); };
    polish = [&oracle](const Vec& x) { return oracle->depth(x); };
  }

  std::vector<Vec> pattern;
  if (d == 2) {
    for (int k = 0; k < 8; ++k) {
      Vec v(2);
      v << std::cos(k * std::numbers::pi / 4), std::sin(k * std::numbers::pi / 4);
      pattern.push_back(v);
    }
  } else {
    for (int k = 0; k < 3; ++k) {
      pattern.push_back(Vec::Unit(3, k));
      pattern.push_back(-Vec::Unit(3, k));
    }
    for (int s = 0; s < 8; ++s) {
      Vec v(3);
      v << (s & 1 ? 1 : -1), (s & 2 ? 1 : -1), (s & 4 ? 1 : -1);
      pattern.push_back(v.normalized());
    }
  }

  const auto [lo, hi] = bounding_box(K);
  const double diam = (hi - lo).norm();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  auto random_rotation = [&]() -> Mat {
    if (d == 2) {
      const double a = 2.0 * std::numbers::pi * unit(rng);
      Mat R(2, 2);
      R << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
      return R;
    }
    double c[4];
    for (double& x : c) x = unit(rng) - 0.5;
    return Eigen::Quaterniond(c[0], c[1], c[2], c[3]).normalized().toRotationMatrix();
  };

  // Compass ascent; the pattern is rotated randomly before the step shrinks
  // so that ridges of the depth function do not stall it.
  auto ascend = [&](const DepthFunction& depth, Vec x, double fx, double h, double h_min) {
    while (h > h_min) {
      bool moved = false;
      for (int attempt = 0; attempt < 4 && !moved; ++attempt) {
        const Mat R = attempt == 0 ? Mat::Identity(d, d) : random_rotation();
        Vec best_x = x;
        double best_f = fx;
        for (const Vec& p : pattern) {
          const Vec y = x + h * (R * p);
          if (!interior_contains(K, y)) continue;
          const double fy = depth(y);
          if (fy > best_f) best_f = fy, best_x = y;
        }
        if (best_f > fx) {
          x = best_x;
          fx = best_f;
          moved = true;
        }
      }
      if (!moved) h *= 0.5;
    }
    return std::pair{x, fx};
  };

  const UniformSampler sampler(K);
  std::vector<Vec> starts{centroid(K)};
  for (int s = 0; s < 32; ++s) starts.push_back(sampler(rng));

  Vec best_x = starts[0];
  double best_f = -1.0;
  for (const Vec& s : starts) {
    const auto [x, fx] = ascend(depth, s, depth(s), 0.1 * diam, 1e-3 * diam);
    if (fx > best_f) best_f = fx, best_x = x;
  }
  const auto [x, fx] = ascend(polish, best_x, polish(best_x), 1e-3 * diam, 1e-9 * diam);
  const double at_centroid = polish(starts[0]);
  if (at_centroid > fx) return DeepestPoint{starts[0], at_centroid};
  return DeepestPoint{x, fx};
}

}  // namespace depthcraft
