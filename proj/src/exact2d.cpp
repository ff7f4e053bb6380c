#include "depthcraft/exact2d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace depthcraft {

using geom::Vec2;

namespace {

double cross(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

}  // namespace

PolygonStructure preprocess(const HPolytope& K) {
  if (K.dim() != 2) throw InputError("exact depth needs a planar polygon");
  geom::SortStats stats;
  const geom::Polygon poly = geom::polygon_from_halfplanes(K, &stats);
  PolygonStructure P;
  P.source = K;
  P.sort_comparisons = stats.comparisons;
  const std::size_t n = poly.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    PolygonEdge e;
    e.start = poly.vertices[i];
    e.end = poly.vertices[(i + 1) % n];
    e.direction = e.end - e.start;
    e.normal = Vec2(K.A()(poly.row_of_edge[i], 0), K.A()(poly.row_of_edge[i], 1)).normalized();
    P.edges.push_back(e);
  }
  P.area = geom::shoelace(poly.vertices);
  return P;
}

ChordSolution solve_chord_system(const PolygonStructure& P, int j, int k, const Vec2& q) {
  const int n = static_cast<int>(P.edges.size());
  if (!(0 <= j && j < k && k < n)) throw InputError("edge pair must satisfy 0 <= j < k < n");
  const auto& tol = tolerances();
  const PolygonEdge& ej = P.edges[j];
  const PolygonEdge& ek = P.edges[k];
  const Vec2& dj = ej.direction;
  const Vec2& dk = ek.direction;
  // start_j + s d_j + start_k + t d_k = 2q
  const Vec2 r = 2.0 * q - ej.start - ek.start;
  const double det = cross(dj, dk);
  const double lj = dj.norm();
  const double lk = dk.norm();
  const double feas = tol.chord_feasibility;

  ChordSolution sol;
  sol.j = j;
  sol.k = k;
  double s, t;
  if (std::abs(det) > tol.chord_parallel * lj * lk) {
    s = cross(r, dk) / det;
    t = cross(dj, r) / det;
    if (s < -feas || s > 1.0 + feas || t < -feas || t > 1.0 + feas) return sol;
    sol.kind = ChordKind::unique;
  } else {
    // parallel edges: solvable only if r runs along them
    const double scale = 1.0 + r.norm();
    if (std::abs(cross(dj, r)) / lj > feas * scale) return sol;
    const double rho = r.dot(dj) / (lj * lj);
    const double kappa = dk.dot(dj) / (lj * lj);
    // s + kappa t = rho, t in [0,1]
    double lo, hi;
    if (kappa < 0.0) {
      lo = std::max(0.0, rho);
      hi = std::min(1.0, rho - kappa);
    } else {
      lo = std::max(0.0, rho - kappa);
      hi = std::min(1.0, rho);
    }
    if (lo > hi + feas) return sol;
    s = 0.5 * (lo + hi);
    t = (rho - s) / kappa;
    sol.kind = ChordKind::parallel_family;
  }
  sol.s = std::clamp(s, 0.0, 1.0);
  sol.t = std::clamp(t, 0.0, 1.0);
  sol.on_j = ej.start + sol.s * dj;
  sol.on_k = ek.start + sol.t * dk;
  sol.midpoint_residual = (0.5 * (sol.on_j + sol.on_k) - q).norm();
  return sol;
}

double chord_side_area(const PolygonStructure& P, const ChordSolution& chord) {
  // U on e_j, then the vertices where e_{j+1}, ..., e_k start, then W on e_k
  std::vector<Vec2> ring;
  ring.reserve(static_cast<std::size_t>(chord.k - chord.j + 2));
  ring.push_back(chord.on_j);
  for (int i = chord.j + 1; i <= chord.k; ++i) ring.push_back(P.edges[i].start);
  ring.push_back(chord.on_k);
  return geom::shoelace(ring);
}

DepthResult exact_depth(const PolygonStructure& P, const Vec2& q) {
  DepthResult out;
  out.mode = DepthMode::exact;
  const int n = static_cast<int>(P.edges.size());
  double best = std::numeric_limits<double>::infinity();
  std::optional<ChordSolution> best_chord;
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      ++out.pairs_solved;
      const ChordSolution sol = solve_chord_system(P, j, k, q);
      if (sol.kind == ChordKind::none) continue;
      if ((sol.on_j - sol.on_k).norm() <= tolerances().chord_feasibility) continue;
      const double side = chord_side_area(P, sol);
      const double v = std::min(side, P.area - side);
      if (v < best) {
        best = v;
        best_chord = sol;
      }
    }
  }

  // closed-interior test; the boundary carries depth zero
  bool inside = true;
  for (const auto& e : P.edges)
    if (e.normal.dot(q - e.start) >= -tolerances().chord_feasibility) inside = false;
  if (!inside || !best_chord) {
    out.value = 0.0;
    return out;
  }
  out.value = std::clamp(best / P.area, 0.0, 0.5);
  Vec a(2), b(2);
  a << best_chord->on_j.x(), best_chord->on_j.y();
  b << best_chord->on_k.x(), best_chord->on_k.y();
  out.chord = std::pair{a, b};
  return out;
}

}  // namespace depthcraft
