#include "tspscale/exact.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "tspscale/error.hpp"

namespace tspscale {

namespace {

constexpr double kTieTolerance = 1e-12;

}  // namespace

std::string_view to_string(SolutionMethod method) {
  switch (method) {
    case SolutionMethod::brute: return "brute";
    case SolutionMethod::held_karp: return "held_karp";
    case SolutionMethod::external_import: return "external_import";
    case SolutionMethod::surrogate: return "surrogate";
  }
  return "unknown";
}

SolutionMethod solution_method_from_string(std::string_view name) {
  if (name == "brute") return SolutionMethod::brute;
  if (name == "held_karp") return SolutionMethod::held_karp;
  if (name == "external_import") return SolutionMethod::external_import;
  if (name == "surrogate") return SolutionMethod::surrogate;
  throw ValidationError("unknown solution method '" + std::string(name) + "'");
}

OptimalSolution brute_force_optimal(const TspInstance& instance) {
  const int n = instance.n();
  if (n > kBruteForceMaxNodes) {
    throw CapacityError("brute force limited to n <= " + std::to_string(kBruteForceMaxNodes) +
                        ": n = " + std::to_string(n) + " would enumerate " +
                        std::to_string(count_tours(n)) + " tours");
  }
  const DistanceMatrix dist(instance);
  std::vector<NodeIndex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0u);

  // Pass 1 finds the minimum; pass 2 takes the first tour (in lexicographic
  // enumeration order) within the tie tolerance of it.
  auto for_each_canonical = [&](auto&& visit) {
    std::iota(perm.begin(), perm.end(), 0u);
    do {
      if (perm[1] < perm[n - 1] && !visit(perm)) return;
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
  };

  double best = std::numeric_limits<double>::infinity();
  for_each_canonical([&](const std::vector<NodeIndex>& p) {
    best = std::min(best, tour_length(dist, p));
    return true;
  });
  const double allowed = best * (1.0 + kTieTolerance);
  std::vector<NodeIndex> chosen;
  for_each_canonical([&](const std::vector<NodeIndex>& p) {
    if (tour_length(dist, p) <= allowed) {
      chosen = p;
      return false;
    }
    return true;
  });

  CanonicalTour tour = CanonicalTour::from_canonical(std::move(chosen));
  const double cost = tour_length(dist, tour.perm());
  return OptimalSolution{instance.instance_id(), std::move(tour), cost, SolutionMethod::brute};
}

std::uint64_t held_karp_table_bytes(int n) {
  if (n < 3) return 0;
  const int m = n - 1;
  return (std::uint64_t{1} << m) * static_cast<std::uint64_t>(m) * sizeof(double);
}

OptimalSolution held_karp_optimal(const TspInstance& instance, std::optional<int> max_nodes) {
  const int n = instance.n();
  const int limit = max_nodes.value_or(kHeldKarpDefaultMaxNodes);
  if (n > limit || n > 31) {
    throw CapacityError("Held-Karp limited to n <= " + std::to_string(std::min(limit, 31)) +
                        ": n = " + std::to_string(n) + " needs about " +
                        std::to_string(held_karp_table_bytes(std::min(n, 40)) >> 20) +
                        " MiB of DP table");
  }
  const DistanceMatrix dist(instance);
  const int m = n - 1;  // nodes 1..n-1 map to bits 0..m-1
  const std::uint32_t full = (std::uint32_t{1} << m) - 1;
  const std::size_t stride = static_cast<std::size_t>(m);

  // remaining[S*m + (j-1)]: cheapest path that starts at j (already in S),
  // visits every node outside S, and returns to node 0.
  std::vector<double> remaining((static_cast<std::size_t>(full) + 1) * stride,
                                std::numeric_limits<double>::infinity());
  for (int j = 1; j <= m; ++j) remaining[full * stride + (j - 1)] = dist(j, 0);
  for (std::uint32_t set = full; set-- > 1;) {
    for (int j = 1; j <= m; ++j) {
      const std::uint32_t jbit = std::uint32_t{1} << (j - 1);
      if (!(set & jbit)) continue;
      double best = std::numeric_limits<double>::infinity();
      for (int v = 1; v <= m; ++v) {
        const std::uint32_t vbit = std::uint32_t{1} << (v - 1);
        if (set & vbit) continue;
        best = std::min(best, dist(j, v) + remaining[(set | vbit) * stride + (v - 1)]);
      }
      remaining[set * stride + (j - 1)] = best;
    }
  }
  double optimum = std::numeric_limits<double>::infinity();
  for (int v = 1; v <= m; ++v) {
    const std::uint32_t vbit = std::uint32_t{1} << (v - 1);
    optimum = std::min(optimum, dist(0, v) + remaining[vbit * stride + (v - 1)]);
  }

  // Greedy reconstruction: at each position take the smallest node that can
  // still complete a tour within the tie tolerance of the optimum.
  const double allowed = optimum * (1.0 + kTieTolerance);
  std::vector<NodeIndex> perm{0};
  perm.reserve(static_cast<std::size_t>(n));
  std::uint32_t set = 0;
  NodeIndex current = 0;
  double spent = 0.0;
  for (int step = 0; step < m; ++step) {
    for (int v = 1; v <= m; ++v) {
      const std::uint32_t vbit = std::uint32_t{1} << (v - 1);
      if (set & vbit) continue;
      const double edge = dist(current, v);
      if (spent + edge + remaining[(set | vbit) * stride + (v - 1)] <= allowed) {
        spent += edge;
        set |= vbit;
        current = static_cast<NodeIndex>(v);
        perm.push_back(current);
        break;
      }
    }
  }
  if (perm.size() != static_cast<std::size_t>(n)) {
    throw NumericError("Held-Karp reconstruction failed");
  }
  CanonicalTour tour = canonicalize(perm);
  const double cost = tour_length(dist, tour.perm());
  return OptimalSolution{instance.instance_id(), std::move(tour), cost,
                         SolutionMethod::held_karp};
}

}  // namespace tspscale
