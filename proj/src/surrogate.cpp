#include "tspscale/surrogate.hpp"

#include <optional>
#include <string>

#include "tspscale/error.hpp"
#include "tspscale/parallel.hpp"

namespace tspscale {

void SurrogateConfig::validate() const {
  if (descents_per_instance < 1) {
    throw ValidationError("surrogate needs descents_per_instance >= 1, got " +
                          std::to_string(descents_per_instance));
  }
}

int default_surrogate_descents(int n) noexcept { return n <= 10 ? 100 : 1000; }

RandomStream surrogate_stream(std::uint64_t master_seed, int n, int d) {
  return RandomStream(master_seed,
                      "surrogate-descents/n=" + std::to_string(n) + "/d=" + std::to_string(d));
}

OptimalSolution surrogate_optimal(const TspInstance& instance, const SurrogateConfig& config,
                                  const RandomStream& stream) {
  config.validate();
  const DistanceMatrix dist(instance);
  std::vector<NodeIndex> perm;
  std::optional<CanonicalTour> best;
  double best_cost = 0.0;
  for (int k = 0; k < config.descents_per_instance; ++k) {
    RandomStream start = stream.at(static_cast<std::uint64_t>(k));
    random_permutation(start, instance.n(), perm);
    detail::descend_in_place(dist, perm, config.move, std::nullopt);
    CanonicalTour canonical = canonicalize(perm);
    const double cost = tour_length(dist, canonical.perm());
    if (!best || cost < best_cost || (cost == best_cost && canonical < *best)) {
      best = std::move(canonical);
      best_cost = cost;
    }
  }
  return OptimalSolution{instance.instance_id(), std::move(*best), best_cost,
                         SolutionMethod::surrogate};
}

std::vector<OptimalSolution> solve_instances(const std::vector<TspInstance>& instances,
                                             const SolveMethod& method,
                                             std::uint64_t master_seed, unsigned threads) {
  if (instances.empty()) return {};
  const int n = instances.front().n();
  const int d = instances.front().d();
  if (method.kind == SolveMethod::Kind::exact_auto && n > method.exact_max_nodes) {
    throw CapacityError("exact solving limited to n <= " + std::to_string(method.exact_max_nodes) +
                        " (Held-Karp table for n = " + std::to_string(n) + " needs " +
                        std::to_string(held_karp_table_bytes(std::min(n, 40)) >> 20) +
                        " MiB); use a surrogate method");
  }
  if (method.kind == SolveMethod::Kind::surrogate) method.surrogate.validate();
  const RandomStream base = surrogate_stream(master_seed, n, d);
  std::vector<std::optional<OptimalSolution>> slots(instances.size());
  parallel_for(instances.size(), threads, [&](std::size_t i) {
    const TspInstance& inst = instances[i];
    if (method.kind == SolveMethod::Kind::exact_auto) {
      slots[i] = held_karp_optimal(inst, method.exact_max_nodes);
    } else {
      slots[i] = surrogate_optimal(inst, method.surrogate, base.at(inst.instance_id()));
    }
  });
  std::vector<OptimalSolution> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

SolutionDataset build_solution_dataset(const std::filesystem::path& instances_dir,
                                       const SolveMethod& method,
                                       const std::filesystem::path& out_dir, unsigned threads) {
  const InstanceDataset data = read_instance_dataset(instances_dir);
  SolutionDataset out;
  out.solutions = solve_instances(data.instances, method, data.manifest.master_seed, threads);
  SolutionManifest& m = out.manifest;
  m.master_seed = data.manifest.master_seed;
  m.n = data.manifest.n;
  m.d = data.manifest.d;
  m.count = data.manifest.count;
  if (method.kind == SolveMethod::Kind::exact_auto) {
    m.method = SolutionMethod::held_karp;
  } else {
    m.method = SolutionMethod::surrogate;
    m.descents_per_instance = method.surrogate.descents_per_instance;
    m.move = method.surrogate.move;
  }
  write_solution_dataset(out_dir, m, out.solutions);
  return out;
}

WelchTTest validate_surrogate(const CostSummary& a, const CostSummary& b) {
  return welch_t_test(a, b);
}

}  // namespace tspscale
