#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tspscale/instance.hpp"
#include "tspscale/rng.hpp"
#include "tspscale/search.hpp"
#include "tspscale/tour.hpp"

namespace tspscale {

/// Outcome of many unconstrained descents on one instance.
struct LandscapeCensus {
  std::uint64_t instance_id;
  int n;
  int d;
  MoveKind move;
  std::uint64_t descents;
  std::uint64_t unique_optima;
  CanonicalTour blo_tour;  // best-found local optimum
  double blo_cost;
  std::uint64_t blo_visits;
  double mean_depth;  // applied moves per descent
  /// Every distinct local optimum reached, sorted.
  std::vector<CanonicalTour> optima;
};

/// Descent k starts from random_tour(stream.at(k)), so a census with fewer
/// descents sees a prefix of the same starts.
LandscapeCensus census(const TspInstance& instance, MoveKind move, std::uint64_t descents,
                       const RandomStream& stream, unsigned threads = 1);

struct LandscapeSummary {
  int n;
  int d;
  MoveKind move;
  std::uint64_t descents;
  std::uint64_t instances;
  double mean_unique_optima;
  double mean_blo_rate;
  double mean_depth;
  /// Sample SDs; meaningless (and reported as 0) when sd_defined is false.
  double sd_unique_optima;
  double sd_blo_rate;
  double sd_depth;
  bool sd_defined;
};

/// Batch means over censuses sharing (n, d, move, descents).
LandscapeSummary aggregate_census(std::span<const LandscapeCensus> censuses);

}  // namespace tspscale
