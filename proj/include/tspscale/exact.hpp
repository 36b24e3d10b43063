#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "tspscale/instance.hpp"
#include "tspscale/tour.hpp"

namespace tspscale {

enum class SolutionMethod { brute, held_karp, external_import, surrogate };

std::string_view to_string(SolutionMethod method);
SolutionMethod solution_method_from_string(std::string_view name);

/// A solved instance. `cost` is tour_length(instance, tour).
struct OptimalSolution {
  std::uint64_t instance_id;
  CanonicalTour tour;
  double cost;
  SolutionMethod method;
};

inline constexpr int kBruteForceMaxNodes = 11;
inline constexpr int kHeldKarpDefaultMaxNodes = 18;

/// Exhaustive enumeration of all (n-1)!/2 tours. Among tours whose cost is
/// within a relative 1e-12 of the minimum, returns the lexicographically
/// smallest canonical tour. Throws CapacityError for n > 11.
OptimalSolution brute_force_optimal(const TspInstance& instance);

/// Held-Karp dynamic programme over subsets, O(2^n n^2) time and
/// O(2^n n) memory. Ties are resolved like brute_force_optimal. Throws
/// CapacityError for n > max_nodes (default 18) with the memory estimate.
OptimalSolution held_karp_optimal(const TspInstance& instance,
                                  std::optional<int> max_nodes = std::nullopt);

/// Bytes of DP table held_karp_optimal would allocate for n nodes.
std::uint64_t held_karp_table_bytes(int n);

}  // namespace tspscale
