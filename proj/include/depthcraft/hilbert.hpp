#pragma once

#include "depthcraft/polytope.hpp"

#include <optional>

namespace depthcraft {

// Hilbert distance between interior points. nullopt when a point sits on the
// boundary (the distance is infinite); DomainError when a point is outside K.
std::optional<double> hilbert_distance(const HPolytope& K, const Vec& p, const Vec& q);

struct HilbertBall {
  Vec center;
  double radius;  // <= 0 means empty
};

bool hilbert_ball_contains(const HPolytope& K, const HilbertBall& ball, const Vec& y);

}  // namespace depthcraft
