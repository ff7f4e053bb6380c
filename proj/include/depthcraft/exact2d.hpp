#pragma once

#include "depthcraft/depth_result.hpp"
#include "depthcraft/polytope.hpp"

#include <cstdint>
#include <vector>

namespace depthcraft {

struct PolygonEdge {
  geom::Vec2 start;
  geom::Vec2 end;
  geom::Vec2 direction;  // end - start
  geom::Vec2 normal;     // outward, unit
};

// Edges in increasing order of their outer-normal angle; edge i ends where
// edge i+1 starts.
struct PolygonStructure {
  double area = 0.0;
  std::vector<PolygonEdge> edges;
  HPolytope source;
  std::uint64_t sort_comparisons = 0;
};

PolygonStructure preprocess(const HPolytope& K);

enum class ChordKind { none, unique, parallel_family };

// A chord of K with endpoints on edges j and k whose midpoint is the query.
struct ChordSolution {
  ChordKind kind = ChordKind::none;
  int j = 0;
  int k = 0;
  geom::Vec2 on_j = geom::Vec2::Zero();
  geom::Vec2 on_k = geom::Vec2::Zero();
  double s = 0.0;  // edge parameters, endpoints start + s * direction
  double t = 0.0;
  double midpoint_residual = 0.0;
};

ChordSolution solve_chord_system(const PolygonStructure& P, int j, int k, const geom::Vec2& q);

// Area of the part of K cut off by the chord on the side of edges j+1..k.
double chord_side_area(const PolygonStructure& P, const ChordSolution& chord);

DepthResult exact_depth(const PolygonStructure& P, const geom::Vec2& q);

}  // namespace depthcraft
