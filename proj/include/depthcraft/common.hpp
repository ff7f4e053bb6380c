#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace depthcraft {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Input could not be used at all: wrong dimension, NaN, unbounded body, ...
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed input for which the requested quantity does not exist
// (empty trimmed region, point outside the body, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical procedure ran out of its iteration budget.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

// Every numeric tolerance used by the library lives here.
struct Tolerances {
  // clip_line: |a.dir| below this (relative to |a||dir|) counts as parallel.
  double parallel = 1e-14;
  // Vertex enumeration: constraint slack accepted for a vertex, and merge
  // distance for coincident vertices (both relative to body scale).
  double vertex_feasibility = 1e-9;
  double vertex_merge = 1e-10;
  // Hilbert metric guards, relative to the chord length through p and q.
  double hilbert_same_point = 1e-14;
  double hilbert_boundary = 1e-12;
  // General MVIE barrier solver.
  int mvie_max_newton = 200;
  double mvie_gap = 1e-10;
  // Symmetric MVIE (Khachiyan with away steps).
  double khachiyan_tol = 1e-9;
  int khachiyan_max_iter = 100000;
  // Ellipsoid pair predicate.
  double ellipsoid_intersect = 1e-9;
  // exact2d chord system.
  double chord_parallel = 1e-12;
  double chord_feasibility = 1e-9;
  // Walk contiguity slack on ray parameters.
  double walk_contiguity = 1e-9;
  // Monte-Carlo volume fallback for d >= 4.
  long monte_carlo_samples = 1000000;
};

const Tolerances& tolerances();

}  // namespace depthcraft
