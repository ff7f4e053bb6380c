#include "depthcraft/fixtures.hpp"

#include "depthcraft/exact2d.hpp"
#include "depthcraft/hilbert.hpp"
#include "depthcraft/io.hpp"
#include "depthcraft/oracle.hpp"

#include <cmath>
#include <filesystem>
#include <sstream>

#include "json.hpp"

namespace depthcraft {

using nlohmann::json;

namespace {

HPolytope square() {
  return HPolytope::box(Vec::Constant(2, -0.5), Vec::Constant(2, 0.5));
}

HPolytope triangle() {
  Mat A(3, 2);
  A << -1, 0, 0, -1, 1, 1;
  Vec b(3);
  b << 0, 0, 1;
  return HPolytope(A, b);
}

Vec point(double x, double y) {
  Vec v(2);
  v << x, y;
  return v;
}

struct Checker {
  std::vector<std::string>& problems;
  void near(const std::string& what, double got, double want, double tol) {
    if (!(std::abs(got - want) <= tol)) {
      std::ostringstream s;
      s.precision(17);
      s << what << ": got " << got << ", expected " << want << " (tolerance " << tol << ")";
      problems.push_back(s.str());
    }
  }
};

json depth_entry(const PolygonStructure& P, const HPolytope& K, const Vec& q, double expected, Checker& check,
                 const std::string& label) {
  const double exact = exact_depth(P, geom::Vec2(q[0], q[1])).value;
  const double oracle = oracle_depth(K, q);
  check.near(label + " exact", exact, expected, 1e-9);
  check.near(label + " oracle", oracle, expected, 1e-6);
  return json{{"query", {q[0], q[1]}}, {"expected", expected}, {"exact", exact}, {"oracle", oracle}};
}

}  // namespace

FixtureSet generate_fixtures() {
  FixtureSet set;
  Checker check{set.problems};
  const HPolytope sq = square();
  const HPolytope tri = triangle();
  set.files["square.json"] = polytope_to_json_text(sq) + "\n";
  set.files["triangle.json"] = polytope_to_json_text(tri) + "\n";

  const PolygonStructure Psq = preprocess(sq);
  json sq_depths;
  sq_depths["axis"] = json::array();
  for (double delta : {0.02, 0.05, 0.1, 0.2, 0.4})
    sq_depths["axis"].push_back(
        depth_entry(Psq, sq, point(0.0, 0.5 - delta), delta, check, "square axis depth " + std::to_string(delta)));
  sq_depths["diagonal"] = json::array();
  for (double delta : {0.02, 0.08}) {
    const double x = 0.5 - std::sqrt(2.0 * delta) / 2.0;
    sq_depths["diagonal"].push_back(
        depth_entry(Psq, sq, point(x, x), delta, check, "square diagonal depth " + std::to_string(delta)));
  }
  sq_depths["center"] = depth_entry(Psq, sq, point(0.0, 0.0), 0.5, check, "square center depth");
  set.files["square_depths.json"] = sq_depths.dump(2) + "\n";

  const PolygonStructure Ptri = preprocess(tri);
  json tri_depths;
  tri_depths["centroid"] = depth_entry(Ptri, tri, point(1.0 / 3.0, 1.0 / 3.0), 4.0 / 9.0, check, "triangle centroid");
  set.files["triangle_depths.json"] = tri_depths.dump(2) + "\n";

  // along the x-axis the chord is (-1/2, 1/2): d = 1/2 ln(((c + 1/2)(1/2 - a)) / ((a + 1/2)(1/2 - c)))
  json table = json::array();
  const double pairs[][2] = {{0.0, 0.25}, {-0.25, 0.25}, {0.0, 0.4}, {-0.4, 0.1}, {0.1, 0.45}};
  for (const auto& pr : pairs) {
    const double a = pr[0], c = pr[1];
    const double expected = 0.5 * std::log(((c + 0.5) * (0.5 - a)) / ((a + 0.5) * (0.5 - c)));
    const double got = *hilbert_distance(sq, point(a, 0.0), point(c, 0.0));
    check.near("square Hilbert distance", got, expected, 1e-12);
    table.push_back(json{{"p", {a, 0.0}}, {"q", {c, 0.0}}, {"expected", expected}, {"computed", got}});
  }
  set.files["square_hilbert.json"] = table.dump(2) + "\n";

  std::string sums;
  for (const auto& [name, body] : set.files) sums += sha256_hex(body) + "  " + name + "\n";
  set.files["SHA256SUMS"] = sums;
  return set;
}

std::vector<std::string> compare_fixtures(const FixtureSet& set, const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<std::string> diffs;
  for (const auto& [name, body] : set.files) {
    const fs::path path = fs::path(dir) / name;
    if (!fs::exists(path)) {
      diffs.push_back(name + ": missing");
      continue;
    }
    if (read_file(path.string()) != body) diffs.push_back(name + ": differs from the regenerated contents");
  }
  return diffs;
}

}  // namespace depthcraft
