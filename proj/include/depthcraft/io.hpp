#pragma once

#include "depthcraft/polytope.hpp"

#include <string>

namespace depthcraft {

// {"dim": d, "A": [[...], ...], "b": [...]}; row i reads a_i.z <= b_i.
HPolytope polytope_from_json_text(const std::string& text);
std::string polytope_to_json_text(const HPolytope& K);
HPolytope load_polytope(const std::string& path);

// "x,y[,z]" with no NaN or infinity.
Vec parse_point(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

// Lower-case hex SHA-256.
std::string sha256_hex(const std::string& bytes);
std::string sha256_file(const std::string& path);

}  // namespace depthcraft
