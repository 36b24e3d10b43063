#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "tspscale/instance.hpp"
#include "tspscale/tour.hpp"

namespace tspscale {

/// two_opt reverses a contiguous block of positions; two_exchange swaps the
/// nodes at two positions.
enum class MoveKind { two_opt, two_exchange };

std::string_view to_string(MoveKind move);
MoveKind move_kind_from_string(std::string_view name);

/// Relative improvement threshold: a move improves only when its delta is
/// below -kImprovementEpsilon * current cost.
inline constexpr double kImprovementEpsilon = 1e-12;

struct DescentResult {
  double start_cost;
  CanonicalTour final_tour;
  double final_cost;
  int moves_made;
  /// Set only when the depth limit stopped the descent while an improving
  /// move still existed.
  bool hit_depth_limit;
  /// Candidate moves evaluated over all neighborhood scans.
  std::uint64_t neighbor_evaluations;
};

/// Cost change of reversing positions i..j (0 <= i < j < n). Rejects moves
/// that leave the loop unchanged: (0, n-1), (0, n-2) and (1, n-1).
double two_opt_delta(const TspInstance& instance, const Tour& tour, int i, int j);

/// Cost change of swapping the nodes at positions i < j.
double two_exchange_delta(const TspInstance& instance, const Tour& tour, int i, int j);

/// Number of candidate moves one neighborhood scan evaluates.
std::uint64_t neighborhood_size(MoveKind move, int n) noexcept;

/// Steepest descent: every step scans the full neighborhood and applies the
/// most negative delta (ties to the lexicographically smallest (i, j)).
/// Stops at a local optimum or after max_depth applied moves.
DescentResult descend(const TspInstance& instance, const Tour& start, MoveKind move,
                      std::optional<int> max_depth = std::nullopt);

/// True when no move of the given kind improves the tour by more than the
/// relative threshold.
bool is_local_optimum(const TspInstance& instance, const Tour& tour, MoveKind move);

namespace detail {

struct InPlaceDescent {
  double start_cost;
  double final_cost;
  int moves_made;
  bool hit_depth_limit;
  std::uint64_t neighbor_evaluations;
};

/// Descent on a caller-owned permutation buffer; perm holds the final tour
/// on return. final_cost is the running total, not a fresh recompute.
InPlaceDescent descend_in_place(const DistanceMatrix& dist, std::vector<NodeIndex>& perm,
                                MoveKind move, std::optional<int> max_depth);

bool is_local_optimum(const DistanceMatrix& dist, std::span<const NodeIndex> perm,
                      MoveKind move);

}  // namespace detail

}  // namespace tspscale
