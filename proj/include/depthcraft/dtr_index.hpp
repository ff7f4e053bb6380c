#pragma once

#include "depthcraft/canonical.hpp"
#include "depthcraft/macbeath.hpp"
#include "depthcraft/oracle.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace depthcraft {

// Scales of the packing and covering Macbeath ellipsoids for one level.
struct DeloneParams {
  int dim = 0;
  double eps = 0.0;
  double delta = 0.0;
  double volume = 0.0;    // of the canonical body
  double packing = 0.0;   // eps delta |K| / (2 (d^4 + 1))
  double covering = 0.0;  // eps delta |K| / 4
  double max_walk = 0.0;  // ceil(d^(10d) / (eps delta) ln(1/delta)), kept as a double

  // (3 + p)/(1 - p) sqrt(d) p  <  c  <=  (e^s - 1)/(e^s + 1),  s = eps delta |K|
  double chain_lower() const;
  double chain_upper() const;
  bool chain_holds() const { return chain_lower() < covering && covering <= chain_upper(); }
};

DeloneParams make_params(int dim, double eps, double delta, double volume);

// Depth on a body: exact in the plane, the oracle in space.
struct LevelDepth {
  DepthFunction depth;
  bool exact = false;
  double slack = 0.0;  // membership in K_delta is depth >= delta - slack
};
LevelDepth level_depth(const HPolytope& K, const OracleConfig& cfg);

struct BuildConfig {
  std::uint64_t seed = 1;
  OracleConfig oracle;
  // Front expansion: proposals sit at `proposal_radius` of the covering
  // ellipsoid of an accepted center, and are dropped when they fall inside
  // `exclusion_radius` of any accepted center.
  int proposal_directions = 0;  // 0: 12 in the plane, 32 in space
  double proposal_radius = 0.9;
  double exclusion_radius = 0.6;
  int audit_samples = 1000;
  int repair_rounds = 8;
  int threads = 0;
};

struct BuildStats {
  std::uint64_t proposals = 0;
  std::uint64_t depth_evaluations = 0;
  std::uint64_t repairs = 0;
  int audit_rounds = 0;
  double covering_rate = 0.0;  // of the final audit round
  double elapsed_ms = 0.0;
};

struct DeloneIndex {
  CanonicalForm canon;
  DeloneParams params;
  std::uint64_t seed = 0;
  std::vector<Vec> centers;       // canonical coordinates
  std::vector<Mat> unit_shapes;   // Macbeath ellipsoid shape at lambda = 1
  std::vector<Ellipsoid> covering;
  std::vector<Ellipsoid> packing;
  std::vector<std::vector<int>> adjacency;
  Vec root;
  int root_vertex = 0;
  BuildStats stats;

  std::size_t size() const { return centers.size(); }
  // min(max_walk, #centers)
  std::uint64_t iteration_cap() const;
};

// Throws DomainError when K_delta is empty or the covering audit keeps failing.
DeloneIndex build_index(const HPolytope& K, double eps, double delta, const BuildConfig& cfg = {});

struct WalkStats {
  std::uint64_t iterations = 0;  // steps between vertices
  std::vector<int> visited;
  std::vector<double> exits;     // exit parameter of the ray at each visited vertex
  bool hit_cap = false;
};

struct AmqResult {
  bool yes = false;
  WalkStats walk;
};

// Query in input coordinates.
AmqResult amq(const DeloneIndex& index, const Vec& q);
// Query already in canonical coordinates.
AmqResult amq_canonical(const DeloneIndex& index, const Vec& y);

struct IndexAudit {
  std::size_t centers = 0;
  std::size_t max_degree = 0;
  double mean_degree = 0.0;
  std::uint64_t packing_violations = 0;
  std::uint64_t pairs_checked = 0;
  double covering_rate = 0.0;
  double degree_bound = 0.0;  // (8 sqrt(d) covering / packing)^(2d)
  std::uint64_t walk_cap_hits = 0;
  std::map<std::uint64_t, std::uint64_t> walk_lengths;  // iterations -> count
};

// Packing disjointness on every adjacent pair plus `random_pairs` random
// pairs, covering over `samples` points of K_delta, walks over `samples`
// uniform points of the body.
IndexAudit audit_index(const DeloneIndex& index, std::uint64_t seed = 1, int samples = 1000,
                       int random_pairs = 1000);

void write_index(std::ostream& out, const DeloneIndex& index);
DeloneIndex read_index(std::istream& in);
void save_index(const DeloneIndex& index, const std::string& path);
DeloneIndex load_index(const std::string& path);

}  // namespace depthcraft
