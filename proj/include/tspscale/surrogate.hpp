#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "tspscale/datasets.hpp"
#include "tspscale/exact.hpp"
#include "tspscale/rng.hpp"
#include "tspscale/search.hpp"
#include "tspscale/stats.hpp"

namespace tspscale {

struct SurrogateConfig {
  int descents_per_instance = 100;
  MoveKind move = MoveKind::two_opt;

  void validate() const;
};

/// Descent count used for surrogate datasets at a node count: 100 up to
/// 10 nodes, 1000 above.
int default_surrogate_descents(int n) noexcept;

/// Stream whose .at(instance_id).at(k) seeds descent k of an instance.
RandomStream surrogate_stream(std::uint64_t master_seed, int n, int d);

/// Best of k unconstrained descents from independent random starts; descent
/// k starts from random_tour(stream.at(k)). Exact cost ties go to the
/// lexicographically smaller canonical tour.
OptimalSolution surrogate_optimal(const TspInstance& instance, const SurrogateConfig& config,
                                  const RandomStream& stream);

/// How a solution dataset is produced.
struct SolveMethod {
  enum class Kind { exact_auto, surrogate };
  Kind kind = Kind::exact_auto;
  SurrogateConfig surrogate{};
  int exact_max_nodes = kHeldKarpDefaultMaxNodes;

  static SolveMethod exact() { return {}; }
  static SolveMethod best_of(SurrogateConfig config) {
    return SolveMethod{Kind::surrogate, config, kHeldKarpDefaultMaxNodes};
  }
};

/// One solution per instance, in instance order. exact_auto runs Held-Karp
/// and throws CapacityError before solving anything when n exceeds its
/// capacity. Output is independent of `threads`.
std::vector<OptimalSolution> solve_instances(const std::vector<TspInstance>& instances,
                                             const SolveMethod& method,
                                             std::uint64_t master_seed, unsigned threads = 1);

/// Reads an instance dataset, solves it and writes a solution dataset
/// (atomically: nothing is left at `out_dir` on failure).
SolutionDataset build_solution_dataset(const std::filesystem::path& instances_dir,
                                       const SolveMethod& method,
                                       const std::filesystem::path& out_dir,
                                       unsigned threads = 1);

/// Welch t-test of surrogate costs `a` against optimal costs `b`.
WelchTTest validate_surrogate(const CostSummary& a, const CostSummary& b);

}  // namespace tspscale
