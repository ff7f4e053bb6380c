#include "doctest.h"

#include "bodies.hpp"
#include "depthcraft/adq.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>

using namespace depthcraft;
using namespace testbodies;

namespace {

std::vector<LadderAction> actions(const LadderOutcome& o) {
  std::vector<LadderAction> out;
  for (const LadderStep& s : o.steps) out.push_back(s.action);
  return out;
}

const AdqSchedule& square_schedule() {
  static const AdqSchedule S = build_schedule(square(), 0.25);
  return S;
}

}  // namespace

TEST_CASE("depth ladders") {
  const std::vector<double> q = depth_ladder(0.25);
  REQUIRE(q.size() == 3);
  CHECK(q[0] == 0.375);
  CHECK(q[1] == 0.28125);
  CHECK(q[2] == 0.25);
  const std::vector<double> f = depth_ladder(0.2);
  REQUIRE(f.size() == 5);
  CHECK(f[3] == doctest::Approx(0.2048).epsilon(1e-15));
  CHECK(f[4] == 0.2);
  for (double eps : {0.01, 0.05, 0.1, 0.2, 0.3, 0.333}) {
    const std::vector<double> l = depth_ladder(eps);
    REQUIRE(l.size() >= 2);
    CHECK(l[l.size() - 2] > eps);
    CHECK(l.back() == eps);
    for (std::size_t j = 0; j + 2 < l.size(); ++j) CHECK(l[j] / l[j + 1] == doctest::Approx(1.0 / (1.0 - eps)));
  }
  CHECK_THROWS_AS(depth_ladder(1.0 / 3.0), InputError);
  CHECK_THROWS_AS(depth_ladder(0.0), InputError);
}

TEST_CASE("five-level walkthrough") {
  const std::vector<double> deltas{0.5, 0.4, 0.3, 0.2, 0.1};
  const std::vector<bool> empty{true, true, true, false, false};
  const LadderOutcome yes = search_ladder(deltas, empty, [](int x) { return x == 4; });
  CHECK(actions(yes) == std::vector<LadderAction>{LadderAction::empty_raise, LadderAction::yes_stop});
  CHECK(yes.result.value == 0.2);
  CHECK(yes.result.levels_probed == std::vector<int>{3, 4});
  CHECK_FALSE(yes.result.shallow);

  const LadderOutcome no = search_ladder(deltas, empty, [](int) { return false; });
  CHECK(actions(no) ==
        std::vector<LadderAction>{LadderAction::empty_raise, LadderAction::no_raise, LadderAction::last_level});
  CHECK(no.result.value == 0.1);
  CHECK(no.result.shallow);

  const LadderOutcome single = search_ladder({0.1}, {false}, [](int) -> bool { throw std::logic_error("probed"); });
  CHECK(single.steps.size() == 1);
  CHECK(single.result.value == 0.1);
}

TEST_CASE("search takes at most ceil(log2 m) + 1 probes and brackets the answer") {
  for (int m = 1; m <= 9; ++m) {
    std::vector<double> deltas;
    for (int j = 0; j < m; ++j) deltas.push_back(1.0 - 0.1 * j);
    const int bound = static_cast<int>(std::ceil(std::log2(m))) + 1;
    // consistent answers: levels deeper than the point say No, the rest Yes
    for (int first_empty = 0; first_empty <= m; ++first_empty)
      for (int level = 1; level <= m + 1; ++level) {
        std::vector<bool> empty(static_cast<std::size_t>(m), false);
        for (int j = 0; j < std::min(first_empty, m - 1); ++j) empty[static_cast<std::size_t>(j)] = true;
        const LadderOutcome o = search_ladder(deltas, empty, [&](int x) { return x >= level; });
        CHECK(static_cast<int>(o.result.iterations) <= bound);
        CHECK(std::find(deltas.begin(), deltas.end(), o.result.value) != deltas.end());
        int expect = std::max(level, std::min(first_empty, m - 1) + 1);
        expect = std::min(expect, m);
        CHECK(o.result.value == deltas[static_cast<std::size_t>(expect - 1)]);
      }
  }
}

TEST_CASE("square schedule") {
  const AdqSchedule& S = square_schedule();
  REQUIRE(S.size() == 3);
  CHECK(S.max_depth == doctest::Approx(0.5).epsilon(1e-6));
  for (const AdqLevel& L : S.levels) CHECK_FALSE(L.empty);
  CHECK(S.levels[0].index);
  CHECK(S.levels[1].index);
  CHECK_FALSE(S.levels[2].index);

  const DepthResult center = adq_query(S, pt(0, 0));
  CHECK(center.value == 0.375);
  CHECK(center.mode == DepthMode::approximate);
  const DepthResult outside = adq_query(S, pt(2, 0));
  CHECK(outside.value == 0.25);
  CHECK(outside.shallow);
  const DepthResult mid = adq_query(S, pt(0, 0.2));
  CHECK(mid.value == 0.28125);
  CHECK(0.75 * 0.3 <= mid.value);
  CHECK(mid.value <= 0.3 / 0.75);
  // same query, same transcript
  const LadderOutcome a = adq_trace(S, pt(0.1, -0.3)), b = adq_trace(S, pt(0.1, -0.3));
  CHECK(actions(a) == actions(b));
  CHECK(a.result.value == b.result.value);
}

TEST_CASE("triangle schedule has every level nonempty") {
  BuildConfig cfg;
  const AdqSchedule S = build_schedule(triangle(), 0.25, cfg);
  CHECK(S.max_depth == doctest::Approx(4.0 / 9.0).epsilon(1e-4));
  for (const AdqLevel& L : S.levels) CHECK_FALSE(L.empty);
}

TEST_CASE("schedule persistence") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "depthcraft_schedule_test";
  fs::remove_all(dir);
  const AdqSchedule& S = square_schedule();
  save_schedule(S, dir.string());
  const AdqSchedule back = load_schedule(dir.string());
  REQUIRE(back.size() == S.size());
  for (const Vec& q : {pt(0, 0), pt(0, 0.2), pt(0.3, 0.3), pt(2, 0)})
    CHECK(adq_query(back, q).value == adq_query(S, q).value);
  {
    std::ofstream corrupt(dir / "level_1.idx", std::ios::binary | std::ios::app);
    corrupt << 'x';
  }
  CHECK_THROWS_AS(load_schedule(dir.string()), InputError);
  fs::remove_all(dir);
}
