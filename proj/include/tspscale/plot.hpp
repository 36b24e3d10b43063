#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tspscale/fit.hpp"

namespace tspscale {

/// Two-column CSV with a header row. A third or later column is ignored.
/// Throws ValidationError naming the offending line.
std::vector<FitPoint> parse_points_csv(const std::string& text);
std::vector<FitPoint> read_points_csv(const std::filesystem::path& path);

struct PlotOptions {
  std::string title;
  std::string x_label = "x";
  std::string y_label = "y";
  bool log_x = false;
  bool log_y = false;
  int width = 640;
  int height = 420;
  int curve_samples = 200;
};

/// Static SVG scatter plot with an optional fitted curve sampled at
/// curve_samples x values spanning the data range.
std::string render_svg(const std::vector<FitPoint>& points, const std::optional<FitResult>& fit,
                       const PlotOptions& options = {});

}  // namespace tspscale
