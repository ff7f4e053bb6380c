#include "depthcraft/depth_result.hpp"

namespace depthcraft {

std::string to_string(DepthMode mode) {
  switch (mode) {
    case DepthMode::exact:
      return "exact";
    case DepthMode::approximate:
      return "approximate";
    case DepthMode::oracle:
      return "oracle";
  }
  return "unknown";
}

}  // namespace depthcraft
