#include "depthcraft/adq.hpp"

#include "depthcraft/canonical.hpp"
#include "depthcraft/io.hpp"
#include "depthcraft/parallel.hpp"

#include <cmath>
#include <filesystem>
#include <sstream>

#include "json.hpp"

namespace depthcraft {

using nlohmann::json;

std::vector<double> depth_ladder(double eps) {
  if (!(eps > 0.0 && eps < 1.0 / 3.0)) throw InputError("eps must lie in (0, 1/3)");
  std::vector<double> deltas;
  for (int j = 1;; ++j) {
    const double d = 0.5 * std::pow(1.0 - eps, j);
    if (!(d > eps)) break;
    deltas.push_back(d);
  }
  deltas.push_back(eps);
  return deltas;
}

AdqSchedule build_schedule(const HPolytope& K, double eps, const BuildConfig& cfg) {
  const std::vector<double> deltas = depth_ladder(eps);
  if (K.dim() != 2 && K.dim() != 3) throw InputError("schedules are built for d in {2,3}");
  AdqSchedule S;
  S.eps = eps;
  const CanonicalForm canon = canonicalize(K);
  const LevelDepth depth = level_depth(canon.body, cfg.oracle);
  S.max_depth = deepest_point(canon.body, cfg.oracle, cfg.seed, depth.exact ? depth.depth : DepthFunction{}).depth;
  const int m = static_cast<int>(deltas.size());
  for (int j = 0; j < m; ++j) S.levels.push_back(AdqLevel{deltas[j], S.max_depth < deltas[j] - depth.slack, nullptr});

  std::vector<int> todo;
  for (int j = 0; j + 1 < m; ++j)
    if (!S.levels[j].empty) todo.push_back(j);
  const int threads = resolve_threads(cfg.threads);
  parallel_for(todo.size(), threads, [&](std::size_t k) {
    const int j = todo[k];
    BuildConfig level_cfg = cfg;
    level_cfg.seed = cfg.seed + static_cast<std::uint64_t>(j);
    level_cfg.threads = 1;
    S.levels[j].index = std::make_shared<const DeloneIndex>(build_index(K, eps, deltas[j], level_cfg));
  });
  return S;
}

std::string to_string(LadderAction action) {
  switch (action) {
    case LadderAction::last_level: return "last-level";
    case LadderAction::empty_stop: return "empty-stop";
    case LadderAction::empty_raise: return "empty-raise";
    case LadderAction::no_stop: return "no-stop";
    case LadderAction::no_raise: return "no-raise";
    case LadderAction::yes_stop: return "yes-stop";
    case LadderAction::yes_lower: return "yes-lower";
  }
  return "?";
}

LadderOutcome search_ladder(const std::vector<double>& deltas, const std::vector<bool>& empty,
                            const std::function<bool(int)>& member) {
  const int m = static_cast<int>(deltas.size());
  if (m < 1 || empty.size() != deltas.size()) throw InputError("ladder and emptiness flags must match");
  LadderOutcome out;
  DepthResult& r = out.result;
  r.mode = DepthMode::approximate;
  auto delta = [&](int j) { return deltas[static_cast<std::size_t>(j - 1)]; };
  int a = 1, b = m;
  for (;;) {
    LadderStep step{a, b, a + (b - a + 2) / 2 - 1, LadderAction::last_level, std::nullopt};
    const int x = step.x;
    ++r.iterations;
    r.levels_probed.push_back(x);
    bool done = false;
    if (x == m) {
      r.value = delta(m);
      r.shallow = true;
      done = true;
    } else if (empty[static_cast<std::size_t>(x - 1)]) {
      if (x == b) {
        step.action = LadderAction::empty_stop;
        r.value = delta(x + 1);
        done = true;
      } else {
        step.action = LadderAction::empty_raise;
        a = x + 1;
      }
    } else {
      const bool yes = member(x);
      step.answer = yes;
      r.amq_answers.push_back(yes);
      if (!yes && x == b) {
        step.action = LadderAction::no_stop;
        r.value = delta(x + 1);
        done = true;
      } else if (!yes) {
        step.action = LadderAction::no_raise;
        a = x + 1;
      } else if (x == a) {
        step.action = LadderAction::yes_stop;
        r.value = delta(x);
        done = true;
      } else {
        step.action = LadderAction::yes_lower;
        b = x - 1;
      }
    }
    out.steps.push_back(step);
    if (done) return out;
  }
}

LadderOutcome adq_trace(const AdqSchedule& S, const Vec& q) {
  std::vector<double> deltas;
  std::vector<bool> empty;
  for (const AdqLevel& L : S.levels) {
    deltas.push_back(L.delta);
    empty.push_back(L.empty);
  }
  return search_ladder(deltas, empty, [&](int x) {
    const AdqLevel& L = S.levels[static_cast<std::size_t>(x - 1)];
    if (!L.index) throw InputError("schedule has no index for a nonempty level");
    return amq(*L.index, q).yes;
  });
}

DepthResult adq_query(const AdqSchedule& S, const Vec& q) { return adq_trace(S, q).result; }

namespace {

std::string level_file(int j) { return "level_" + std::to_string(j) + ".idx"; }

}  // namespace

void save_schedule(const AdqSchedule& S, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  json manifest;
  manifest["format"] = "depthcraft-schedule";
  manifest["version"] = 1;
  manifest["eps"] = S.eps;
  manifest["max_depth"] = S.max_depth;
  manifest["levels"] = json::array();
  for (int j = 1; j <= S.size(); ++j) {
    const AdqLevel& L = S.levels[static_cast<std::size_t>(j - 1)];
    json entry{{"level", j}, {"delta", L.delta}, {"empty", L.empty}};
    if (L.index) {
      std::ostringstream bytes;
      write_index(bytes, *L.index);
      const std::string name = level_file(j);
      write_file((fs::path(dir) / name).string(), bytes.str());
      entry["index"] = name;
      entry["sha256"] = sha256_hex(bytes.str());
      entry["centers"] = L.index->size();
    }
    manifest["levels"].push_back(entry);
  }
  write_file((fs::path(dir) / "manifest.json").string(), manifest.dump(2) + "\n");
}

AdqSchedule load_schedule(const std::string& dir) {
  namespace fs = std::filesystem;
  json manifest;
  try {
    manifest = json::parse(read_file((fs::path(dir) / "manifest.json").string()));
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed schedule manifest: ") + e.what());
  }
  try {
    if (manifest.at("format") != "depthcraft-schedule" || manifest.at("version") != 1)
      throw InputError("unsupported schedule manifest");
    AdqSchedule S;
    S.eps = manifest.at("eps").get<double>();
    S.max_depth = manifest.at("max_depth").get<double>();
    for (const json& entry : manifest.at("levels")) {
      AdqLevel L;
      L.delta = entry.at("delta").get<double>();
      L.empty = entry.at("empty").get<bool>();
      if (entry.contains("index")) {
        const std::string bytes = read_file((fs::path(dir) / entry.at("index").get<std::string>()).string());
        if (sha256_hex(bytes) != entry.at("sha256").get<std::string>())
          throw InputError("checksum mismatch for " + entry.at("index").get<std::string>());
        std::istringstream in(bytes);
        L.index = std::make_shared<const DeloneIndex>(read_index(in));
      }
      S.levels.push_back(std::move(L));
    }
    if (S.levels.empty()) throw InputError("schedule has no levels");
    return S;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed schedule manifest: ") + e.what());
  }
}

}  // namespace depthcraft
