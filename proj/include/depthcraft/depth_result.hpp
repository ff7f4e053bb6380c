#pragma once

#include "depthcraft/common.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace depthcraft {

enum class DepthMode { exact, approximate, oracle };

std::string to_string(DepthMode mode);

struct DepthResult {
  double value = 0.0;
  DepthMode mode = DepthMode::exact;
  // exact mode
  std::uint64_t pairs_solved = 0;
  std::optional<std::pair<Vec, Vec>> chord;
  // approximate mode
  std::uint64_t iterations = 0;
  std::vector<int> levels_probed;  // 1-based ladder positions
  std::vector<bool> amq_answers;   // one per probe that reached an index
  bool shallow = false;            // declared "depth <= eps"
};

}  // namespace depthcraft
