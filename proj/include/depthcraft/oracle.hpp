#pragma once

#include "depthcraft/polytope.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace depthcraft {

struct OracleConfig {
  int coarse_directions = 0;  // 0: 4096 in the plane, 20000 in space
  int refine_rounds = 40;
  int refine_best = 8;
  double tol = 1e-6;  // absolute, on normalized depth
};

// Brute-force halfspace depth: minimum normalized cap volume over a direction
// net, refined locally around the best coarse directions. d in {2,3}.
class DepthOracle {
 public:
  explicit DepthOracle(const HPolytope& K, OracleConfig cfg = {});

  const HPolytope& body() const { return body_; }
  const OracleConfig& config() const { return cfg_; }
  double volume() const { return caps_.total(); }

  double depth(const Vec& q) const;
  // Normalized volume of the cap {z : v.z >= v.q}.
  double cap_fraction(const Vec& v, const Vec& q) const;

 private:
  double refine_planar(double angle, double step, const Vec& q) const;
  double refine_spatial(const Vec& v, double step, const Vec& q) const;

  HPolytope body_;
  OracleConfig cfg_;
  geom::CapEvaluator caps_;
  std::vector<Vec> directions_;
  double coarse_step_ = 0.0;
};

double oracle_depth(const HPolytope& K, const Vec& q, const OracleConfig& cfg = {});
bool in_dtr(const HPolytope& K, const Vec& q, double delta, const OracleConfig& cfg = {});

using DepthFunction = std::function<double(const Vec&)>;

struct DeepestPoint {
  Vec point;
  double depth;
};

// Compass ascent on a depth function from the centroid and 32 seeded random
// interior starts. Uses the oracle when `depth` is empty.
DeepestPoint deepest_point(const HPolytope& K, const OracleConfig& cfg = {}, std::uint64_t seed = 1,
                           DepthFunction depth = {});

}  // namespace depthcraft
