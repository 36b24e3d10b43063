#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tspscale/search.hpp"

namespace tspscale {

enum class SweepAxis { nodes, dims };

/// Source of per-instance optimal costs in a sweep.
///   exact_auto    Held-Karp; points beyond its capacity are refused
///   surrogate:K   best of K 2-opt descents
///   hybrid:K      Held-Karp up to exact_max_nodes nodes, surrogate:K above
struct OptMethod {
  enum class Kind { exact_auto, surrogate, hybrid };
  Kind kind = Kind::exact_auto;
  int descents = 100;
  int exact_max_nodes = 12;

  static OptMethod parse(const std::string& text);
  [[nodiscard]] std::string str() const;
};

struct SweepConfig {
  SweepAxis axis = SweepAxis::nodes;
  std::vector<int> values;
  int fixed_n = 10;  // used when axis == dims
  int fixed_d = 2;   // used when axis == nodes
  std::uint64_t instances_per_point = 1000;
  MoveKind move = MoveKind::two_opt;
  std::optional<int> max_depth;
  OptMethod opt_method;
  std::uint64_t master_seed = 0;

  /// Throws ValidationError.
  void validate() const;
  [[nodiscard]] nlohmann::ordered_json to_json() const;
  static SweepConfig from_json(const nlohmann::ordered_json& j);
};

struct SweepPoint {
  int scale = 0;
  int n = 0;
  int d = 0;
  bool ok = false;
  std::string error;  // capacity refusal message when !ok
  std::string opt_method;
  std::uint64_t instances = 0;
  double mu_model = 0.0;
  double mu_opt = 0.0;
  double s = 0.0;
  double sd_model = 0.0;
  double sd_opt = 0.0;
  double sd_gap = 0.0;
  double min_gap = 0.0;
  double early_stop_fraction = 0.0;
  double mean_moves = 0.0;

  [[nodiscard]] nlohmann::ordered_json to_json() const;
  static SweepPoint from_json(const nlohmann::ordered_json& j);
};

/// One sweep point: generate instances, solve them, run one descent per
/// instance from a random start, and summarize the paired gaps.
/// Capacity refusals come back as ok = false rather than exceptions.
SweepPoint run_sweep_point(const SweepConfig& config, int value, unsigned threads = 1);

/// Runs every point. With out_dir set, writes manifest.json,
/// points/<value>.json (one per finished point, reused on a rerun with an
/// identical config) and sweep.csv. Results never depend on `threads`.
std::vector<SweepPoint> run_sweep(const SweepConfig& config,
                                  const std::optional<std::filesystem::path>& out_dir,
                                  unsigned threads = 1);

/// CSV with header scale,s,sd,early_stop_fraction,mu_model,mu_opt,instances
/// (ok points only).
std::string sweep_csv(const std::vector<SweepPoint>& points);

}  // namespace tspscale
