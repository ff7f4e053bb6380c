#include "depthcraft/hilbert.hpp"

#include <cmath>

namespace depthcraft {

std::optional<double> hilbert_distance(const HPolytope& K, const Vec& p, const Vec& q) {
  if (p.size() != K.dim() || q.size() != K.dim())
    throw InputError("point dimension does not match polytope dimension");
  if (!contains(K, p) || !contains(K, q)) throw DomainError("point lies outside the body");
  const auto& tol = tolerances();

  const Vec diff = q - p;
  const double s = diff.norm();
  if (s == 0.0) return 0.0;
  const Vec u = diff / s;
  const auto chord = clip_line(K, p, u);
  if (!chord) return std::nullopt;  // p and q on a common boundary face
  // the chord length stands in for the diameter in the guards
  const double len = chord->length();
  if (s <= tol.hilbert_same_point * len) return 0.0;
  const double behind = -chord->lo;    // |p - a|
  const double ahead = chord->hi - s;  // |q - b|
  if (behind <= tol.hilbert_boundary * len || ahead <= tol.hilbert_boundary * len) return std::nullopt;
  // 1/2 ln(|q-a||p-b| / (|p-a||q-b|)) with |q-a| = behind + s, |p-b| = ahead + s
  return 0.5 * (std::log1p(s / behind) + std::log1p(s / ahead));
}

bool hilbert_ball_contains(const HPolytope& K, const HilbertBall& ball, const Vec& y) {
  if (ball.radius <= 0.0) return false;
  if (!interior_contains(K, y)) return false;
  const auto dist = hilbert_distance(K, ball.center, y);
  return dist && *dist < ball.radius;
}

}  // namespace depthcraft
