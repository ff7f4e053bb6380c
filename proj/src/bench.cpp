#include "depthcraft/bench.hpp"

#include "depthcraft/exact2d.hpp"

#include <chrono>
#include <random>
#include <sstream>

namespace depthcraft {

BenchRow bench_row(const HPolytope& K, const DeloneIndex& index, int queries, std::uint64_t seed) {
  BenchRow row;
  row.n = static_cast<int>(K.rows());
  row.d = K.dim();
  row.eps = index.params.eps;
  row.delta = index.params.delta;
  row.seed = index.seed;
  row.centers = index.size();
  std::uint64_t degree_sum = 0;
  for (const auto& nb : index.adjacency) {
    row.max_degree = std::max(row.max_degree, nb.size());
    degree_sum += nb.size();
  }
  row.mean_degree = row.centers ? static_cast<double>(degree_sum) / static_cast<double>(row.centers) : 0.0;
  row.build_ms = index.stats.elapsed_ms;

  std::mt19937_64 rng(seed);
  const UniformSampler sampler(K);
  std::vector<Vec> qs;
  for (int k = 0; k < queries; ++k) qs.push_back(sampler(rng));
  std::uint64_t walk_sum = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const Vec& q : qs) {
    const AmqResult r = amq(index, q);
    walk_sum += r.walk.iterations;
    row.max_walk = std::max(row.max_walk, r.walk.iterations);
  }
  const double us = std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start).count();
  row.query_us = queries ? us / queries : 0.0;
  row.mean_walk = queries ? static_cast<double>(walk_sum) / queries : 0.0;
  if (K.dim() == 2 && !qs.empty()) {
    const PolygonStructure P = preprocess(K);
    row.pairs_solved = exact_depth(P, geom::Vec2(qs[0][0], qs[0][1])).pairs_solved;
  }
  return row;
}

std::string bench_csv_header() {
  return "n,d,eps,delta,seed,centers,max_degree,mean_degree,mean_walk,max_walk,pairs_solved,build_ms,query_us";
}

std::string bench_csv_line(const BenchRow& r) {
  std::ostringstream s;
  s.precision(10);
  s << r.n << ',' << r.d << ',' << r.eps << ',' << r.delta << ',' << r.seed << ',' << r.centers << ','
    << r.max_degree << ',' << r.mean_degree << ',' << r.mean_walk << ',' << r.max_walk << ',' << r.pairs_solved
    << ',' << r.build_ms << ',' << r.query_us;
  return s.str();
}

}  // namespace depthcraft
