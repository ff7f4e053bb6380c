#pragma once

#include "depthcraft/dtr_index.hpp"

#include <cstdint>
#include <string>

namespace depthcraft {

// One CSV row: index size and degree, walk lengths over uniform queries in
// the body, exact-depth pair count for planar bodies, wall times.
struct BenchRow {
  int n = 0;  // halfspaces
  int d = 0;
  double eps = 0.0;
  double delta = 0.0;
  std::uint64_t seed = 0;
  std::size_t centers = 0;
  std::size_t max_degree = 0;
  double mean_degree = 0.0;
  double mean_walk = 0.0;
  std::uint64_t max_walk = 0;
  std::uint64_t pairs_solved = 0;
  double build_ms = 0.0;
  double query_us = 0.0;
};

BenchRow bench_row(const HPolytope& K, const DeloneIndex& index, int queries, std::uint64_t seed);
std::string bench_csv_header();
std::string bench_csv_line(const BenchRow& row);

}  // namespace depthcraft
