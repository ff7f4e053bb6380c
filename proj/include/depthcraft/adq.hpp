#pragma once

#include "depthcraft/depth_result.hpp"
#include "depthcraft/dtr_index.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace depthcraft {

// delta_j = (1 - eps)^j / 2 while that exceeds eps, then eps itself last.
std::vector<double> depth_ladder(double eps);

struct AdqLevel {
  double delta = 0.0;
  bool empty = false;
  // Absent for empty levels and for the last level, which is never queried.
  std::shared_ptr<const DeloneIndex> index;
};

struct AdqSchedule {
  double eps = 0.0;
  double max_depth = 0.0;  // deepest point found while deciding emptiness
  std::vector<AdqLevel> levels;

  int size() const { return static_cast<int>(levels.size()); }
};

AdqSchedule build_schedule(const HPolytope& K, double eps, const BuildConfig& cfg = {});

enum class LadderAction {
  last_level,    // x = m: answer eps
  empty_stop,    // empty level at x = b: answer delta_{x+1}
  empty_raise,   // empty level below b: a <- x + 1
  no_stop,       // "No" at x = b: answer delta_{x+1}
  no_raise,      // "No" below b: a <- x + 1
  yes_stop,      // "Yes" at x = a: answer delta_x
  yes_lower,     // "Yes" above a: b <- x - 1
};

std::string to_string(LadderAction action);

struct LadderStep {
  int a = 0, b = 0, x = 0;  // 1-based ladder positions
  LadderAction action = LadderAction::last_level;
  std::optional<bool> answer;  // membership answer when the level was queried
};

struct LadderOutcome {
  DepthResult result;
  std::vector<LadderStep> steps;
};

// Binary search over the ladder. `member(x)` answers the approximate
// membership query at the 1-based level x; it is called only for nonempty
// levels below the last.
LadderOutcome search_ladder(const std::vector<double>& deltas, const std::vector<bool>& empty,
                            const std::function<bool(int)>& member);

LadderOutcome adq_trace(const AdqSchedule& S, const Vec& q);
DepthResult adq_query(const AdqSchedule& S, const Vec& q);

// Directory with manifest.json and one level_<j>.idx per stored index.
void save_schedule(const AdqSchedule& S, const std::string& dir);
AdqSchedule load_schedule(const std::string& dir);

}  // namespace depthcraft
