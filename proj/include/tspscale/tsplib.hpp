#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "tspscale/instance.hpp"

namespace tspscale {

/// TSPLIB text for a 2D instance: TYPE TSP, EDGE_WEIGHT_TYPE EUC_2D and a
/// NODE_COORD_SECTION with 1-based ids and round-trip precision coordinates.
/// Throws ValidationError for d != 2.
std::string to_tsplib(const TspInstance& instance, const std::string& name);

/// Parsed EUC_2D coordinates of a TSPLIB file, row-major (x, y) pairs.
struct TsplibProblem {
  std::string name;
  int dimension = 0;
  std::vector<double> coords;
};

TsplibProblem parse_tsplib(const std::string& text);

/// Writes instance_<id>.tsp for every instance into out_dir; returns the
/// paths written.
std::vector<std::filesystem::path> export_tsplib(const std::vector<TspInstance>& instances,
                                                 const std::filesystem::path& out_dir);

}  // namespace tspscale
