#include "depthcraft/io.hpp"

#include <openssl/evp.h>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>

#include "json.hpp"

namespace depthcraft {

using nlohmann::json;

namespace {

double finite_number(const json& v, const char* what) {
  if (!v.is_number()) throw InputError(std::string(what) + " must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw InputError(std::string(what) + " must be finite");
  return x;
}

}  // namespace

HPolytope polytope_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed polytope JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("A") || !j.contains("b"))
    throw InputError("polytope JSON needs \"dim\", \"A\" and \"b\"");
  if (!j["dim"].is_number_integer() || j["dim"].get<long>() < 1) throw InputError("\"dim\" must be a positive integer");
  const int d = j["dim"].get<int>();
  const json& A = j["A"];
  const json& b = j["b"];
  if (!A.is_array() || !b.is_array() || A.size() != b.size() || A.empty())
    throw InputError("\"A\" and \"b\" must be nonempty arrays of equal length");
  Mat M(static_cast<Eigen::Index>(A.size()), d);
  Vec rhs(static_cast<Eigen::Index>(b.size()));
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (!A[i].is_array() || A[i].size() != static_cast<std::size_t>(d))
      throw InputError("row " + std::to_string(i) + " of \"A\" must have " + std::to_string(d) + " entries");
    for (int k = 0; k < d; ++k) M(static_cast<Eigen::Index>(i), k) = finite_number(A[i][k], "entry of A");
    rhs[static_cast<Eigen::Index>(i)] = finite_number(b[i], "entry of b");
  }
  return HPolytope(M, rhs);
}

std::string polytope_to_json_text(const HPolytope& K) {
  json j;
  j["dim"] = K.dim();
  j["A"] = json::array();
  for (Eigen::Index i = 0; i < K.rows(); ++i) {
    json row = json::array();
    for (int k = 0; k < K.dim(); ++k) row.push_back(K.A()(i, k));
    j["A"].push_back(row);
  }
  j["b"] = json::array();
  for (Eigen::Index i = 0; i < K.rows(); ++i) j["b"].push_back(K.b()[i]);
  return j.dump();
}

HPolytope load_polytope(const std::string& path) { return polytope_from_json_text(read_file(path)); }

Vec parse_point(const std::string& text) {
  std::vector<double> xs;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double x;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      throw InputError("cannot read a number from '" + item + "'");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos)
      throw InputError("cannot read a number from '" + item + "'");
    if (!std::isfinite(x)) throw InputError("coordinates must be finite");
    xs.push_back(x);
  }
  if (xs.empty()) throw InputError("empty point");
  return Eigen::Map<Vec>(xs.data(), static_cast<Eigen::Index>(xs.size()));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open " + path + " for writing");
  out << contents;
  if (!out) throw InputError("could not write " + path);
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1)
    throw std::runtime_error("sha256 failed");
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return hex.str();
}

std::string sha256_file(const std::string& path) { return sha256_hex(read_file(path)); }

}  // namespace depthcraft
