#include "depthcraft/cli.hpp"

#include "depthcraft/adq.hpp"
#include "depthcraft/bench.hpp"
#include "depthcraft/exact2d.hpp"
#include "depthcraft/fixtures.hpp"
#include "depthcraft/hilbert.hpp"
#include "depthcraft/io.hpp"
#include "depthcraft/parallel.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

namespace depthcraft {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t) { return std::chrono::duration<double, std::milli>(Clock::now() - t).count(); }

json to_json(const Vec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

std::vector<double> parse_list(const std::string& text) {
  const Vec v = parse_point(text);
  return std::vector<double>(v.data(), v.data() + v.size());
}

void check_dim(const HPolytope& K, const Vec& q) {
  if (q.size() != K.dim())
    throw InputError("query has " + std::to_string(q.size()) + " coordinates, the body has dimension " +
                     std::to_string(K.dim()));
}

// key: value lines; nested objects become dotted keys
void print_pretty(std::ostream& out, const json& j, const std::string& prefix = "") {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) print_pretty(out, v, prefix.empty() ? k : prefix + "." + k);
    return;
  }
  out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

struct Globals {
  std::uint64_t seed = 1;
  int threads = 0;
  bool pretty = false;
};

json run_manifest(const std::string& command, const json& inputs, const Globals& g, const json& params,
                  const json& outputs, double elapsed) {
  return json{{"command", command},     {"inputs", inputs},      {"seed", g.seed},
              {"parameters", params},   {"outputs", outputs},    {"tool_version", kToolVersion},
              {"elapsed_ms", elapsed}};
}

json input_record(const std::string& path) { return json{{"path", path}, {"sha256", sha256_file(path)}}; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Halfspace depth, trimmed regions and approximate depth queries", "depthcraft"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "seed for every stochastic step");
  app.add_option("--threads", g.threads, "worker threads (default: DEPTHCRAFT_THREADS or 1)");
  app.add_flag("--pretty", g.pretty, "key: value lines instead of JSON");
  app.set_version_flag("--version", kToolVersion);

  std::string polytope, query, p_text, q_text, index_path, schedule_dir, out_path, check_dir;
  std::string eps_list = "0.5,0.25", delta_list = "0.4,0.3";
  double eps = 0.0, delta = 0.0, tol = 1e-6;
  int directions = 0, refine_rounds = 40, samples = 1000, pairs = 1000, queries = 200, audit_samples = 1000;
  bool trace = false;

  std::function<json()> action;
  std::function<void()> raw_action;

  auto* exact = app.add_subcommand("exact-depth", "exact planar depth");
  exact->add_option("--polytope", polytope)->required();
  exact->add_option("--query", query)->required();
  exact->callback([&] {
    action = [&] {
      const auto t = Clock::now();
      const HPolytope K = load_polytope(polytope);
      const Vec q = parse_point(query);
      check_dim(K, q);
      if (K.dim() != 2) throw InputError("exact-depth needs a planar polygon");
      const DepthResult r = exact_depth(preprocess(K), geom::Vec2(q[0], q[1]));
      json j{{"depth", r.value}, {"mode", to_string(r.mode)}, {"pairs_solved", r.pairs_solved}};
      j["chord"] = r.chord ? json{{"p1", to_json(r.chord->first)}, {"p2", to_json(r.chord->second)}} : json(nullptr);
      j["elapsed_ms"] = ms_since(t);
      return j;
    };
  });

  auto* oracle = app.add_subcommand("oracle-depth", "brute-force depth by direction enumeration");
  oracle->add_option("--polytope", polytope)->required();
  oracle->add_option("--query", query)->required();
  oracle->add_option("--directions", directions, "coarse directions (0: default)");
  oracle->add_option("--refine-rounds", refine_rounds);
  oracle->add_option("--tol", tol);
  oracle->callback([&] {
    action = [&] {
      const auto t = Clock::now();
      const HPolytope K = load_polytope(polytope);
      const Vec q = parse_point(query);
      check_dim(K, q);
      OracleConfig cfg;
      cfg.coarse_directions = directions;
      cfg.refine_rounds = refine_rounds;
      cfg.tol = tol;
      const double d = oracle_depth(K, q, cfg);
      return json{{"depth", d}, {"mode", "oracle"}, {"elapsed_ms", ms_since(t)}};
    };
  });

  auto* hilbert = app.add_subcommand("hilbert-dist", "Hilbert distance between two interior points");
  hilbert->add_option("--polytope", polytope)->required();
  hilbert->add_option("--p", p_text)->required();
  hilbert->add_option("--q", q_text)->required();
  hilbert->callback([&] {
    action = [&] {
      const HPolytope K = load_polytope(polytope);
      const Vec p = parse_point(p_text), q = parse_point(q_text);
      check_dim(K, p);
      check_dim(K, q);
      const auto d = hilbert_distance(K, p, q);
      if (!d) return json{{"d", nullptr}, {"infinite", true}};
      return json{{"d", *d}, {"infinite", false}};
    };
  });

  auto* build = app.add_subcommand("build-index", "build the membership index of one trimmed region");
  build->add_option("--polytope", polytope)->required();
  build->add_option("--eps", eps)->required();
  build->add_option("--delta", delta)->required();
  build->add_option("--out", out_path)->required();
  build->add_option("--audit-samples", audit_samples);
  build->callback([&] {
    action = [&] {
      const auto t = Clock::now();
      const HPolytope K = load_polytope(polytope);
      BuildConfig cfg;
      cfg.seed = g.seed;
      cfg.threads = resolve_threads(g.threads);
      cfg.audit_samples = audit_samples;
      const DeloneIndex ix = build_index(K, eps, delta, cfg);
      save_index(ix, out_path);
      std::size_t max_degree = 0;
      for (const auto& nb : ix.adjacency) max_degree = std::max(max_degree, nb.size());
      const double elapsed = ms_since(t);
      const json params{{"eps", eps}, {"delta", delta}, {"audit_samples", audit_samples}};
      const json outputs{{out_path, sha256_file(out_path)}};
      write_file(out_path + ".manifest.json",
                 run_manifest("build-index", json{{"polytope", input_record(polytope)}}, g, params, outputs, elapsed)
                         .dump(2) +
                     "\n");
      return json{{"centers", ix.size()},
                  {"max_degree", max_degree},
                  {"root", to_json(ix.root)},
                  {"root_vertex", ix.root_vertex},
                  {"lambda_p", ix.params.packing},
                  {"lambda_c", ix.params.covering},
                  {"max_walk", ix.params.max_walk},
                  {"chain_holds", ix.params.chain_holds()},
                  {"audit_rounds", ix.stats.audit_rounds},
                  {"repairs", ix.stats.repairs},
                  {"covering_rate", ix.stats.covering_rate},
                  {"index", out_path},
                  {"sha256", outputs[out_path]},
                  {"elapsed_ms", elapsed}};
    };
  });

  auto* amq_cmd = app.add_subcommand("amq", "approximate membership query against a built index");
  amq_cmd->add_option("--index", index_path)->required();
  amq_cmd->add_option("--query", query)->required();
  amq_cmd->callback([&] {
    action = [&] {
      const DeloneIndex ix = load_index(index_path);
      const Vec q = parse_point(query);
      check_dim(ix.canon.body, q);
      const AmqResult r = amq(ix, q);
      return json{{"answer", r.yes ? "Yes" : "No"},
                  {"iterations", r.walk.iterations},
                  {"visited", r.walk.visited.size()},
                  {"hit_cap", r.walk.hit_cap}};
    };
  });

  auto* sched = app.add_subcommand("build-schedule", "build the depth ladder with one index per level");
  sched->add_option("--polytope", polytope)->required();
  sched->add_option("--eps", eps)->required();
  sched->add_option("--out", out_path)->required();
  sched->add_option("--audit-samples", audit_samples);
  sched->callback([&] {
    action = [&] {
      const auto t = Clock::now();
      const HPolytope K = load_polytope(polytope);
      BuildConfig cfg;
      cfg.seed = g.seed;
      cfg.threads = resolve_threads(g.threads);
      cfg.audit_samples = audit_samples;
      const AdqSchedule S = build_schedule(K, eps, cfg);
      save_schedule(S, out_path);
      json levels = json::array();
      for (const AdqLevel& L : S.levels)
        levels.push_back(json{{"delta", L.delta}, {"empty", L.empty}, {"centers", L.index ? L.index->size() : 0}});
      const double elapsed = ms_since(t);
      const std::string manifest = (std::filesystem::path(out_path) / "manifest.json").string();
      write_file((std::filesystem::path(out_path) / "run.json").string(),
                 run_manifest("build-schedule", json{{"polytope", input_record(polytope)}}, g,
                              json{{"eps", eps}, {"audit_samples", audit_samples}},
                              json{{manifest, sha256_file(manifest)}}, elapsed)
                         .dump(2) +
                     "\n");
      return json{{"m", S.size()}, {"max_depth", S.max_depth}, {"levels", levels}, {"elapsed_ms", elapsed}};
    };
  });

  auto* adq_cmd = app.add_subcommand("adq", "approximate depth query against a schedule");
  adq_cmd->add_option("--schedule", schedule_dir)->required();
  adq_cmd->add_option("--query", query)->required();
  adq_cmd->add_flag("--trace", trace);
  adq_cmd->callback([&] {
    action = [&] {
      const AdqSchedule S = load_schedule(schedule_dir);
      const Vec q = parse_point(query);
      for (const AdqLevel& L : S.levels)
        if (L.index) check_dim(L.index->canon.body, q);
      const LadderOutcome o = adq_trace(S, q);
      json j{{"D", o.result.value},
             {"mode", to_string(o.result.mode)},
             {"shallow", o.result.shallow},
             {"probes", o.result.iterations},
             {"levels_probed", o.result.levels_probed},
             {"amq_answers", o.result.amq_answers}};
      if (trace) {
        json steps = json::array();
        for (const LadderStep& s : o.steps) {
          json step{{"a", s.a}, {"b", s.b}, {"x", s.x}, {"action", to_string(s.action)}};
          step["answer"] = s.answer ? json(*s.answer ? "Yes" : "No") : json(nullptr);
          steps.push_back(step);
        }
        j["transcript"] = steps;
      }
      return j;
    };
  });

  auto* audit = app.add_subcommand("audit", "packing, covering, degree and walk statistics of an index");
  audit->add_option("--index", index_path)->required();
  audit->add_option("--samples", samples);
  audit->add_option("--pairs", pairs);
  audit->callback([&] {
    action = [&] {
      const DeloneIndex ix = load_index(index_path);
      const IndexAudit a = audit_index(ix, g.seed, samples, pairs);
      json hist = json::object();
      for (const auto& [len, count] : a.walk_lengths) hist[std::to_string(len)] = count;
      return json{{"centers", a.centers},
                  {"max_degree", a.max_degree},
                  {"mean_degree", a.mean_degree},
                  {"degree_bound", a.degree_bound},
                  {"packing_violations", a.packing_violations},
                  {"pairs_checked", a.pairs_checked},
                  {"covering_rate", a.covering_rate},
                  {"walk_cap_hits", a.walk_cap_hits},
                  {"walk_lengths", hist}};
    };
  });

  auto* bench = app.add_subcommand("bench", "CSV of index size, degree, walk length and timings");
  bench->add_option("--polytope", polytope, "body (default: the unit square)");
  bench->add_option("--eps", eps_list, "comma-separated");
  bench->add_option("--delta", delta_list, "comma-separated");
  bench->add_option("--queries", queries);
  bench->add_option("--out", out_path, "CSV file (default: stdout)");
  bench->callback([&] {
    raw_action = [&] {
      const HPolytope K = polytope.empty() ? HPolytope::box(Vec::Constant(2, -0.5), Vec::Constant(2, 0.5))
                                           : load_polytope(polytope);
      std::ostringstream csv;
      csv << bench_csv_header() << "\n";
      BuildConfig cfg;
      cfg.seed = g.seed;
      cfg.threads = resolve_threads(g.threads);
      for (double e : parse_list(eps_list))
        for (double d : parse_list(delta_list)) {
          try {
            const DeloneIndex ix = build_index(K, e, d, cfg);
            csv << bench_csv_line(bench_row(K, ix, queries, g.seed)) << "\n";
          } catch (const DomainError& ex) {
            err << "skipping eps=" << e << " delta=" << d << ": " << ex.what() << "\n";
          }
        }
      if (out_path.empty())
        out << csv.str();
      else
        write_file(out_path, csv.str());
    };
  });

  auto* regen = app.add_subcommand("regen-fixtures", "regenerate reference fixtures or check them for drift");
  auto* regen_out = regen->add_option("--out", out_path);
  regen->add_option("--check", check_dir)->excludes(regen_out);
  regen->callback([&] {
    if (out_path.empty() && check_dir.empty()) throw CLI::ValidationError("regen-fixtures needs --out or --check");
    action = [&] {
      const FixtureSet set = generate_fixtures();
      if (!set.problems.empty()) {
        std::string msg = "fixture values disagree with their hand formulas:";
        for (const auto& p : set.problems) msg += "\n  " + p;
        throw DomainError(msg);
      }
      json files = json::array();
      for (const auto& [name, body] : set.files) files.push_back(name);
      if (!check_dir.empty()) {
        const auto diffs = compare_fixtures(set, check_dir);
        if (!diffs.empty()) {
          std::string msg = "fixtures drifted:";
          for (const auto& d : diffs) msg += "\n  " + d;
          throw DomainError(msg);
        }
        return json{{"status", "ok"}, {"checked", files}};
      }
      std::filesystem::create_directories(out_path);
      for (const auto& [name, body] : set.files) write_file((std::filesystem::path(out_path) / name).string(), body);
      return json{{"status", "written"}, {"files", files}, {"dir", out_path}};
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (g.threads < 0) throw InputError("--threads must be positive");
    resolve_threads(g.threads);
    if (raw_action) {
      raw_action();
      return 0;
    }
    const json result = action();
    if (g.pretty)
      print_pretty(out, result);
    else
      out << result.dump() << "\n";
    return 0;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const SolverError& e) {
    err << "solver error: " << e.what() << " (residual " << e.residual() << ")\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace depthcraft
