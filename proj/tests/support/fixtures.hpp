#pragma once

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(KMLAT_FIXTURE_DIR) + "/" + name; }

inline std::string read(const std::string& name) {
  std::ifstream in(path(name));
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

inline nlohmann::json json(const std::string& name) { return nlohmann::json::parse(read(name)); }

} // namespace fixtures
