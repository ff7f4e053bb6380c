#pragma once

#include "depthcraft/polytope.hpp"

namespace depthcraft {

// Maximum-volume ellipsoid {center + factor * u : |u| < 1} inside a polytope,
// with `factor` lower triangular with positive diagonal.
struct InscribedEllipsoid {
  Vec center;
  Mat factor;
  double gap = 0.0;  // duality-gap bound at termination
  int newton_steps = 0;
};

InscribedEllipsoid max_inscribed_ellipsoid(const HPolytope& K);

struct CanonicalForm {
  AffineMap map;     // input coordinates -> canonical coordinates
  HPolytope body;    // map applied to K, rows normalized
  Vec john_center;   // re-solved on `body`; ~0
  // Semi-axes of the re-solved ellipsoid divided by 1/(2d): both ~1.
  double john_radius_check = 0.0;
  double john_eccentricity = 0.0;
};

CanonicalForm canonicalize(const HPolytope& K);

}  // namespace depthcraft
