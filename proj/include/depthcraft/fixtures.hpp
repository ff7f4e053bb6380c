#pragma once

#include <map>
#include <string>
#include <vector>

namespace depthcraft {

// Reference bodies and values regenerated from hand formulas, the exact
// planar algorithm and the oracle. `problems` lists every value that strays
// from its hand formula beyond tolerance.
struct FixtureSet {
  std::map<std::string, std::string> files;  // name -> contents, including SHA256SUMS
  std::vector<std::string> problems;
};

FixtureSet generate_fixtures();

// Differences between `set` and the files under `dir` (missing, extra to the
// checksum list, or changed).
std::vector<std::string> compare_fixtures(const FixtureSet& set, const std::string& dir);

}  // namespace depthcraft
