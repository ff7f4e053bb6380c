#include "depthcraft/dtr_index.hpp"

#include "depthcraft/exact2d.hpp"
#include "depthcraft/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <deque>
#include <fstream>
#include <limits>
#include <memory>
#include <numbers>
#include <random>
#include <sstream>
#include <unordered_map>

namespace depthcraft {

double DeloneParams::chain_lower() const {
  return (3.0 + packing) / (1.0 - packing) * std::sqrt(static_cast<double>(dim)) * packing;
}

double DeloneParams::chain_upper() const {
  const double s = eps * delta * volume;
  return std::expm1(s) / (std::exp(s) + 1.0);
}

DeloneParams make_params(int dim, double eps, double delta, double volume) {
  if (!(eps > 0.0 && eps < 1.0)) throw InputError("eps must lie in (0, 1)");
  if (!(delta > 0.0 && delta <= 0.5)) throw InputError("delta must lie in (0, 1/2]");
  if (!(volume > 0.0)) throw InputError("volume must be positive");
  DeloneParams p;
  p.dim = dim;
  p.eps = eps;
  p.delta = delta;
  p.volume = volume;
  const double d = dim;
  p.packing = eps * delta * volume / (2.0 * (std::pow(d, 4) + 1.0));
  p.covering = eps * delta * volume / 4.0;
  p.max_walk = std::ceil(std::pow(d, 10.0 * d) / (eps * delta) * std::log(1.0 / delta));
  return p;
}

LevelDepth level_depth(const HPolytope& K, const OracleConfig& cfg) {
  LevelDepth out;
  if (K.dim() == 2) {
    auto P = std::make_shared<PolygonStructure>(preprocess(K));
    out.depth = [P](const Vec& q) { return exact_depth(*P, geom::Vec2(q[0], q[1])).value; };
    out.exact = true;
    return out;
  }
  if (K.dim() != 3) throw InputError("depth levels are supported for d in {2,3}");
  auto oracle = std::make_shared<DepthOracle>(K, cfg);
  out.depth = [oracle](const Vec& q) { return oracle->depth(q); };
  out.slack = oracle->config().tol;
  return out;
}

std::uint64_t DeloneIndex::iteration_cap() const {
  const double n = static_cast<double>(centers.size());
  return static_cast<std::uint64_t>(std::min(params.max_walk, n));
}

namespace {

// Buckets points by integer cell; d <= 3.
class CellGrid {
 public:
  CellGrid(int d, double cell) : d_(d), cell_(cell) {}

  double cell() const { return cell_; }

  void insert(const Vec& x, int id) { cells_[key(coords(x))].push_back(id); }

  // Calls f(id) for every point within `reach` cells of x in each axis.
  template <class F>
  void visit(const Vec& x, int reach, F&& f) const {
    const auto c = coords(x);
    std::array<long, 3> k{0, 0, 0};
    const int zr = d_ == 3 ? reach : 0;
    for (long i = -reach; i <= reach; ++i)
      for (long j = -reach; j <= reach; ++j)
        for (long l = -zr; l <= zr; ++l) {
          k = {c[0] + i, c[1] + j, c[2] + l};
          const auto it = cells_.find(key(k));
          if (it == cells_.end()) continue;
          for (int id : it->second) f(id);
        }
  }

 private:
  std::array<long, 3> coords(const Vec& x) const {
    std::array<long, 3> c{0, 0, 0};
    for (int i = 0; i < d_; ++i) c[i] = static_cast<long>(std::floor(x[i] / cell_));
    return c;
  }
  static std::uint64_t key(const std::array<long, 3>& c) {
    constexpr long off = 1L << 20;
    constexpr std::uint64_t mask = (1ULL << 21) - 1;
    return (static_cast<std::uint64_t>(c[0] + off) & mask) |
           ((static_cast<std::uint64_t>(c[1] + off) & mask) << 21) |
           ((static_cast<std::uint64_t>(c[2] + off) & mask) << 42);
  }

  int d_;
  double cell_;
  std::unordered_map<std::uint64_t, std::vector<int>> cells_;
};

Mat random_rotation(int d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  if (d == 2) {
    const double a = 2.0 * std::numbers::pi * unit(rng);
    Mat R(2, 2);
    R << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
    return R;
  }
  double c[4];
  for (double& x : c) x = unit(rng) - 0.5;
  return Eigen::Quaterniond(c[0], c[1], c[2], c[3]).normalized().toRotationMatrix();
}

std::vector<Vec> direction_set(int d, int n) {
  std::vector<Vec> dirs;
  if (d == 2) {
    for (int k = 0; k < n; ++k) {
      Vec v(2);
      v << std::cos(2.0 * std::numbers::pi * k / n), std::sin(2.0 * std::numbers::pi * k / n);
      dirs.push_back(v);
    }
    return dirs;
  }
  const double phi = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int k = 0; k < n; ++k) {
    const double z = 1.0 - (2.0 * k + 1.0) / n;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    Vec v(3);
    v << r * std::cos(phi * k), r * std::sin(phi * k), z;
    dirs.push_back(v);
  }
  return dirs;
}

// Largest semi-axis of {y : y^T Q y < 1}.
double outer_radius(const Mat& Q) {
  return 1.0 / std::sqrt(Eigen::SelfAdjointEigenSolver<Mat>(Q, Eigen::EigenvaluesOnly).eigenvalues()[0]);
}

class Builder {
 public:
  Builder(DeloneIndex& index, const LevelDepth& depth, const BuildConfig& cfg)
      : ix_(index),
        depth_(depth),
        cfg_(cfg),
        d_(index.canon.body.dim()),
        grid_(d_, index.params.covering / 4.0),
        rng_(cfg.seed),
        dirs_(direction_set(d_, cfg.proposal_directions > 0 ? cfg.proposal_directions : (d_ == 2 ? 12 : 32))) {}

  bool in_level(const Vec& x) {
    ++ix_.stats.depth_evaluations;
    return depth_.depth(x) >= ix_.params.delta - depth_.slack;
  }

  void accept(const Vec& x) {
    const Mat unit = macbeath_ellipsoid(ix_.canon.body, x, 1.0).shape;
    const double lc = ix_.params.covering;
    const double lp = ix_.params.packing;
    const int id = static_cast<int>(ix_.centers.size());
    ix_.centers.push_back(x);
    ix_.unit_shapes.push_back(unit);
    ix_.covering.push_back(Ellipsoid{x, unit / (lc * lc)});
    ix_.packing.push_back(Ellipsoid{x, unit / (lp * lp)});
    radii_.push_back(outer_radius(ix_.covering.back().shape));
    max_radius_ = std::max(max_radius_, radii_.back());
    grid_.insert(x, id);
    queue_.push_back(id);
  }

  int reach(double r) const { return std::max(1, static_cast<int>(std::ceil(r / grid_.cell()))); }

  // Some accepted center has y inside its covering ellipsoid shrunk by `factor`.
  bool covered(const Vec& y, double factor) const {
    bool hit = false;
    const double f2 = factor * factor;
    grid_.visit(y, reach(factor * max_radius_), [&](int id) {
      if (!hit && ix_.covering[id].quadratic(y) < f2) hit = true;
    });
    return hit;
  }

  void expand() {
    const double rho = cfg_.proposal_radius;
    const double sigma = cfg_.exclusion_radius;
    while (!queue_.empty()) {
      const int i = queue_.front();
      queue_.pop_front();
      const Mat R = random_rotation(d_, rng_);
      const Vec x = ix_.centers[i];
      const Mat Q = ix_.covering[i].shape;
      for (const Vec& u0 : dirs_) {
        const Vec u = R * u0;
        const Vec p = x + (rho / std::sqrt(u.dot(Q * u))) * u;
        ++ix_.stats.proposals;
        if (covered(p, sigma)) continue;
        if (!interior_contains(ix_.canon.body, p)) continue;
        if (!in_level(p)) continue;
        accept(p);
      }
    }
  }

  // Returns the uncovered level points among `samples` fresh ones.
  std::vector<Vec> audit(int samples, std::uint64_t& found) {
    Vec lo, hi;
    if (depth_.exact) {
      std::tie(lo, hi) = bounding_box(ix_.canon.body);
    } else {
      lo = hi = ix_.centers[0];
      for (const Vec& c : ix_.centers) {
        lo = lo.cwiseMin(c);
        hi = hi.cwiseMax(c);
      }
      lo.array() -= ix_.params.covering;
      hi.array() += ix_.params.covering;
    }
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Vec> missed;
    found = 0;
    const std::uint64_t attempts = 2000ULL * static_cast<std::uint64_t>(samples);
    for (std::uint64_t a = 0; a < attempts && found < static_cast<std::uint64_t>(samples); ++a) {
      Vec y(d_);
      for (int k = 0; k < d_; ++k) y[k] = lo[k] + (hi[k] - lo[k]) * unit(rng_);
      if (!interior_contains(ix_.canon.body, y) || !in_level(y)) continue;
      ++found;
      if (!covered(y, 1.0)) missed.push_back(y);
    }
    return missed;
  }

  void link(int threads) {
    const std::size_t n = ix_.centers.size();
    std::vector<double> inner(n);
    for (std::size_t i = 0; i < n; ++i)
      inner[i] = 1.0 / std::sqrt(Eigen::SelfAdjointEigenSolver<Mat>(ix_.covering[i].shape, Eigen::EigenvaluesOnly)
                                     .eigenvalues()[d_ - 1]);
    std::vector<std::vector<int>> higher(n);
    parallel_for(n, threads, [&](std::size_t i) {
      grid_.visit(ix_.centers[i], reach(radii_[i] + max_radius_), [&](int j) {
        if (j <= static_cast<int>(i)) return;
        const double dist = (ix_.centers[i] - ix_.centers[j]).norm();
        if (dist > (radii_[i] + radii_[j]) * (1.0 + 1e-6)) return;
        if (dist < (inner[i] + inner[j]) * (1.0 - 1e-6) ||
            ellipsoids_intersect(ix_.covering[i], ix_.covering[j]))
          higher[i].push_back(j);
      });
    });
    ix_.adjacency.assign(n, {});
    for (std::size_t i = 0; i < n; ++i)
      for (int j : higher[i]) {
        ix_.adjacency[i].push_back(j);
        ix_.adjacency[j].push_back(static_cast<int>(i));
      }
    for (auto& a : ix_.adjacency) std::sort(a.begin(), a.end());
  }

 private:
  DeloneIndex& ix_;
  const LevelDepth& depth_;
  const BuildConfig& cfg_;
  int d_;
  CellGrid grid_;
  std::mt19937_64 rng_;
  std::vector<Vec> dirs_;
  std::vector<double> radii_;
  double max_radius_ = 0.0;
  std::deque<int> queue_;
};

std::string format_point(const Vec& x) {
  std::ostringstream s;
  s.precision(17);
  s << "(";
  for (Eigen::Index i = 0; i < x.size(); ++i) s << (i ? ", " : "") << x[i];
  s << ")";
  return s.str();
}

}  // namespace

DeloneIndex build_index(const HPolytope& K, double eps, double delta, const BuildConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  if (K.dim() != 2 && K.dim() != 3) throw InputError("indexes are built for d in {2,3}");
  if (!(cfg.proposal_radius > cfg.exclusion_radius && cfg.exclusion_radius > 0.0 && cfg.proposal_radius < 1.0))
    throw InputError("need 0 < exclusion_radius < proposal_radius < 1");
  if (delta > 0.5 && delta < 1.0) throw DomainError("trimmed region is empty: depth never exceeds 1/2");
  DeloneIndex ix;
  ix.canon = canonicalize(K);
  ix.params = make_params(K.dim(), eps, delta, *ix.canon.body.cached_volume());
  ix.seed = cfg.seed;
  const LevelDepth depth = level_depth(ix.canon.body, cfg.oracle);

  Builder b(ix, depth, cfg);
  const Vec o = Vec::Zero(K.dim());
  if (b.in_level(o)) {
    ix.root = o;
  } else {
    const DeepestPoint deep =
        deepest_point(ix.canon.body, cfg.oracle, cfg.seed, depth.exact ? depth.depth : DepthFunction{});
    if (deep.depth < delta - depth.slack) {
      std::ostringstream msg;
      msg << "trimmed region is empty: maximum depth " << deep.depth << " < " << delta;
      throw DomainError(msg.str());
    }
    ix.root = deep.point;
  }
  b.accept(ix.root);
  ix.root_vertex = 0;
  b.expand();

  for (int round = 1;; ++round) {
    std::uint64_t found = 0;
    const std::vector<Vec> missed = b.audit(cfg.audit_samples, found);
    ix.stats.audit_rounds = round;
    ix.stats.covering_rate = found ? 1.0 - static_cast<double>(missed.size()) / static_cast<double>(found) : 1.0;
    if (missed.empty()) break;
    if (round > cfg.repair_rounds)
      throw DomainError("covering audit failed; uncovered point " + format_point(missed.front()));
    for (const Vec& y : missed) {
      if (b.covered(y, 1.0)) continue;
      b.accept(y);
      ++ix.stats.repairs;
    }
    b.expand();
  }

  b.link(resolve_threads(cfg.threads));
  ix.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return ix;
}

AmqResult amq(const DeloneIndex& index, const Vec& q) {
  if (q.size() != index.canon.body.dim()) throw InputError("query dimension does not match the index");
  return amq_canonical(index, index.canon.map.apply(q));
}

AmqResult amq_canonical(const DeloneIndex& index, const Vec& y) {
  AmqResult out;
  if (!y.allFinite()) throw InputError("query must be finite");
  if (!interior_contains(index.canon.body, y)) return out;
  const Vec dir = y - index.root;
  int x = index.root_vertex;
  out.walk.visited.push_back(x);
  if (index.covering[x].contains(y)) {
    out.yes = true;
    return out;
  }
  // dir is nonzero here: the root lies in its own ellipsoid
  double t = ray_ellipsoid_interval(index.covering[x], index.root, dir)->hi;
  out.walk.exits.push_back(t);
  const double slack = tolerances().walk_contiguity;
  const std::uint64_t cap = index.iteration_cap();
  for (;;) {
    if (out.walk.iterations >= cap) {
      out.walk.hit_cap = true;
      return out;
    }
    int next = -1;
    double reach = t;
    for (int z : index.adjacency[x]) {
      const auto I = ray_ellipsoid_interval(index.covering[z], index.root, dir);
      if (!I || !(I->hi > I->lo)) continue;
      if (I->lo <= t + slack && I->hi > reach) {
        reach = I->hi;
        next = z;
      }
    }
    if (next < 0) return out;
    x = next;
    t = reach;
    ++out.walk.iterations;
    out.walk.visited.push_back(x);
    out.walk.exits.push_back(t);
    if (index.covering[x].contains(y)) {
      out.yes = true;
      return out;
    }
  }
}

IndexAudit audit_index(const DeloneIndex& index, std::uint64_t seed, int samples, int random_pairs) {
  IndexAudit a;
  const std::size_t n = index.size();
  const int d = index.canon.body.dim();
  a.centers = n;
  std::uint64_t degree_sum = 0;
  for (const auto& nb : index.adjacency) {
    a.max_degree = std::max(a.max_degree, nb.size());
    degree_sum += nb.size();
  }
  a.mean_degree = n ? static_cast<double>(degree_sum) / static_cast<double>(n) : 0.0;
  a.degree_bound = std::pow(8.0 * std::sqrt(static_cast<double>(d)) * index.params.covering / index.params.packing,
                            2.0 * d);

  std::vector<double> reach_of(n);
  for (std::size_t i = 0; i < n; ++i) reach_of[i] = outer_radius(index.packing[i].shape);
  auto overlap = [&](std::size_t i, std::size_t j) {
    ++a.pairs_checked;
    if ((index.centers[i] - index.centers[j]).norm() > (reach_of[i] + reach_of[j]) * (1.0 + 1e-6)) return false;
    return open_ellipsoids_overlap(index.packing[i], index.packing[j]);
  };
  // packing ellipsoids sit inside covering ones, so overlapping packing
  // ellipsoids can only occur between adjacent vertices
  for (std::size_t i = 0; i < n; ++i)
    for (int j : index.adjacency[i])
      if (j > static_cast<int>(i) && overlap(i, static_cast<std::size_t>(j))) ++a.packing_violations;
  std::mt19937_64 rng(seed);
  if (n >= 2) {
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int k = 0; k < random_pairs; ++k) {
      const std::size_t i = pick(rng), j = pick(rng);
      if (i != j && overlap(i, j)) ++a.packing_violations;
    }
  }

  const LevelDepth depth = level_depth(index.canon.body, OracleConfig{});
  CellGrid grid(d, index.params.covering / 4.0);
  double max_radius = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    grid.insert(index.centers[i], static_cast<int>(i));
    max_radius = std::max(max_radius, outer_radius(index.covering[i].shape));
  }
  const int reach = std::max(1, static_cast<int>(std::ceil(max_radius / grid.cell())));
  const UniformSampler sampler(index.canon.body);
  int level_points = 0, covered = 0;
  for (int k = 0; k < samples; ++k) {
    const Vec y = sampler(rng);
    const AmqResult r = amq_canonical(index, y);
    ++a.walk_lengths[r.walk.iterations];
    if (r.walk.hit_cap) ++a.walk_cap_hits;
    if (depth.depth(y) < index.params.delta - depth.slack) continue;
    ++level_points;
    bool hit = false;
    grid.visit(y, reach, [&](int id) { hit = hit || index.covering[id].contains(y); });
    if (hit) ++covered;
  }
  a.covering_rate = level_points ? static_cast<double>(covered) / level_points : 1.0;
  return a;
}

namespace {

constexpr char kMagic[6] = {'D', 'C', 'I', 'D', 'X', '\0'};
constexpr std::uint32_t kVersion = 1;

template <class T>
void put(std::ostream& out, const T& v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T take(std::istream& in) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!in) throw InputError("index file is truncated");
  return v;
}

void put_vec(std::ostream& out, const Vec& v) {
  put<std::uint64_t>(out, static_cast<std::uint64_t>(v.size()));
  out.write(reinterpret_cast<const char*>(v.data()), static_cast<std::streamsize>(sizeof(double) * v.size()));
}

void put_mat(std::ostream& out, const Mat& m) {
  put<std::uint64_t>(out, static_cast<std::uint64_t>(m.rows()));
  put<std::uint64_t>(out, static_cast<std::uint64_t>(m.cols()));
  out.write(reinterpret_cast<const char*>(m.data()), static_cast<std::streamsize>(sizeof(double) * m.size()));
}

Vec take_vec(std::istream& in) {
  const auto n = take<std::uint64_t>(in);
  if (n > (1ULL << 32)) throw InputError("index file is corrupt");
  Vec v(static_cast<Eigen::Index>(n));
  in.read(reinterpret_cast<char*>(v.data()), static_cast<std::streamsize>(sizeof(double) * n));
  if (!in) throw InputError("index file is truncated");
  return v;
}

Mat take_mat(std::istream& in) {
  const auto r = take<std::uint64_t>(in);
  const auto c = take<std::uint64_t>(in);
  if (r > (1ULL << 20) || c > (1ULL << 20)) throw InputError("index file is corrupt");
  Mat m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  in.read(reinterpret_cast<char*>(m.data()), static_cast<std::streamsize>(sizeof(double) * m.size()));
  if (!in) throw InputError("index file is truncated");
  return m;
}

}  // namespace

void write_index(std::ostream& out, const DeloneIndex& ix) {
  out.write(kMagic, sizeof kMagic);
  put(out, kVersion);
  const DeloneParams& p = ix.params;
  put<std::int32_t>(out, p.dim);
  for (double v : {p.eps, p.delta, p.volume, p.packing, p.covering, p.max_walk}) put(out, v);
  put(out, ix.seed);
  put_mat(out, ix.canon.map.linear());
  put_vec(out, ix.canon.map.offset());
  put_mat(out, ix.canon.body.A());
  put_vec(out, ix.canon.body.b());
  put_vec(out, ix.canon.john_center);
  put(out, ix.canon.john_radius_check);
  put(out, ix.canon.john_eccentricity);
  put_vec(out, ix.root);
  put<std::int64_t>(out, ix.root_vertex);
  put<std::uint64_t>(out, ix.centers.size());
  for (std::size_t i = 0; i < ix.centers.size(); ++i) {
    put_vec(out, ix.centers[i]);
    put_mat(out, ix.unit_shapes[i]);
    put<std::uint64_t>(out, ix.adjacency[i].size());
    for (int j : ix.adjacency[i]) put<std::int32_t>(out, j);
  }
  const BuildStats& s = ix.stats;
  put(out, s.proposals);
  put(out, s.depth_evaluations);
  put(out, s.repairs);
  put<std::int32_t>(out, s.audit_rounds);
  put(out, s.covering_rate);
  if (!out) throw InputError("could not write index");
}

DeloneIndex read_index(std::istream& in) {
  char magic[sizeof kMagic];
  in.read(magic, sizeof magic);
  if (!in || std::memcmp(magic, kMagic, sizeof kMagic) != 0) throw InputError("not an index file");
  if (take<std::uint32_t>(in) != kVersion) throw InputError("unsupported index version");
  DeloneIndex ix;
  DeloneParams& p = ix.params;
  p.dim = take<std::int32_t>(in);
  if (p.dim != 2 && p.dim != 3) throw InputError("index file is corrupt");
  for (double* v : {&p.eps, &p.delta, &p.volume, &p.packing, &p.covering, &p.max_walk}) *v = take<double>(in);
  ix.seed = take<std::uint64_t>(in);
  Mat linear = take_mat(in);
  Vec offset = take_vec(in);
  ix.canon.map = AffineMap(linear, offset);
  Mat A = take_mat(in);
  Vec b = take_vec(in);
  ix.canon.body = HPolytope(A, b).with_cached_volume();
  ix.canon.john_center = take_vec(in);
  ix.canon.john_radius_check = take<double>(in);
  ix.canon.john_eccentricity = take<double>(in);
  ix.root = take_vec(in);
  ix.root_vertex = static_cast<int>(take<std::int64_t>(in));
  const auto n = take<std::uint64_t>(in);
  if (n == 0 || n > (1ULL << 31)) throw InputError("index file is corrupt");
  const double lc = p.covering, lp = p.packing;
  for (std::uint64_t i = 0; i < n; ++i) {
    ix.centers.push_back(take_vec(in));
    ix.unit_shapes.push_back(take_mat(in));
    if (ix.centers.back().size() != p.dim || ix.unit_shapes.back().rows() != p.dim)
      throw InputError("index file is corrupt");
    ix.covering.push_back(Ellipsoid{ix.centers.back(), ix.unit_shapes.back() / (lc * lc)});
    ix.packing.push_back(Ellipsoid{ix.centers.back(), ix.unit_shapes.back() / (lp * lp)});
    const auto deg = take<std::uint64_t>(in);
    if (deg > n) throw InputError("index file is corrupt");
    std::vector<int> nb(deg);
    for (auto& j : nb) {
      j = take<std::int32_t>(in);
      if (j < 0 || static_cast<std::uint64_t>(j) >= n) throw InputError("index file is corrupt");
    }
    ix.adjacency.push_back(std::move(nb));
  }
  if (ix.root_vertex < 0 || static_cast<std::uint64_t>(ix.root_vertex) >= n)
    throw InputError("index file is corrupt");
  BuildStats& s = ix.stats;
  s.proposals = take<std::uint64_t>(in);
  s.depth_evaluations = take<std::uint64_t>(in);
  s.repairs = take<std::uint64_t>(in);
  s.audit_rounds = take<std::int32_t>(in);
  s.covering_rate = take<double>(in);
  return ix;
}

void save_index(const DeloneIndex& index, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open " + path + " for writing");
  write_index(out, index);
}

DeloneIndex load_index(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return read_index(in);
}

}  // namespace depthcraft
