#pragma once

#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"
#include "neurobench/registry.hpp"

namespace nbtest {

inline const neurobench::Registry& shipped() {
  static const neurobench::Registry reg = neurobench::Registry::load_default();
  return reg;
}

inline double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

/// Fresh copy of the shipped datasets in a scratch directory.
inline std::filesystem::path scratch_data(const std::string& tag) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("neurobench_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  for (const auto& e : fs::directory_iterator(neurobench::default_data_dir())) {
    if (e.path().extension() == ".json") fs::copy_file(e.path(), dir / e.path().filename());
  }
  return dir;
}

inline nlohmann::json read_json(const std::filesystem::path& p) {
  std::ifstream in(p);
  return nlohmann::json::parse(in);
}

inline void write_json(const std::filesystem::path& p, const nlohmann::json& j) {
  std::ofstream(p) << j.dump(1);
}

}  // namespace nbtest
