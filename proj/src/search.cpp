#include "tspscale/search.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "tspscale/error.hpp"

namespace tspscale {

std::string_view to_string(MoveKind move) {
  return move == MoveKind::two_opt ? "two_opt" : "two_exchange";
}

MoveKind move_kind_from_string(std::string_view name) {
  if (name == "two_opt" || name == "2opt" || name == "2-opt") return MoveKind::two_opt;
  if (name == "two_exchange" || name == "2exchange" || name == "2-exchange") {
    return MoveKind::two_exchange;
  }
  throw ValidationError("unknown move kind '" + std::string(name) + "'");
}

namespace {

inline double reversal_delta(const DistanceMatrix& dist, std::span<const NodeIndex> p, int i,
                             int j) noexcept {
  const int n = static_cast<int>(p.size());
  const NodeIndex a = p[(i + n - 1) % n];
  const NodeIndex b = p[i];
  const NodeIndex c = p[j];
  const NodeIndex e = p[(j + 1) % n];
  return dist(a, c) + dist(b, e) - dist(a, b) - dist(c, e);
}

inline double swap_delta(const DistanceMatrix& dist, std::span<const NodeIndex> p, int i,
                         int j) noexcept {
  const int n = static_cast<int>(p.size());
  if (n == 3) return 0.0;  // every ordering of three nodes is the same loop
  // Edge k joins positions k and k+1. A swap touches edges i-1, i, j-1, j.
  std::array<int, 4> edges{(i + n - 1) % n, i, (j + n - 1) % n, j};
  std::sort(edges.begin(), edges.end());
  const auto last = std::unique(edges.begin(), edges.end());
  auto node_after_swap = [&](int pos) {
    if (pos == i) return p[j];
    if (pos == j) return p[i];
    return p[pos];
  };
  double before = 0.0;
  double after = 0.0;
  for (auto it = edges.begin(); it != last; ++it) {
    const int k = *it;
    const int k1 = (k + 1) % n;
    before += dist(p[k], p[k1]);
    after += dist(node_after_swap(k), node_after_swap(k1));
  }
  return after - before;
}

struct BestMove {
  double delta = 0.0;
  int i = -1;
  int j = -1;
};

// Canonical 2-opt move set: 1 <= i < j <= n-1 without (1, n-1), one entry per
// pair of non-adjacent tour edges, n(n-3)/2 in total.
BestMove scan_two_opt(const DistanceMatrix& dist, std::span<const NodeIndex> p) noexcept {
  const int n = static_cast<int>(p.size());
  BestMove best;
  for (int i = 1; i < n - 1; ++i) {
    const NodeIndex a = p[i - 1];
    const NodeIndex b = p[i];
    const double ab = dist(a, b);
    const int j_end = (i == 1) ? n - 2 : n - 1;
    for (int j = i + 1; j <= j_end; ++j) {
      const NodeIndex c = p[j];
      const NodeIndex e = p[j + 1 == n ? 0 : j + 1];
      const double delta = dist(a, c) + dist(b, e) - ab - dist(c, e);
      if (delta < best.delta) best = {delta, i, j};
    }
  }
  return best;
}

BestMove scan_two_exchange(const DistanceMatrix& dist, std::span<const NodeIndex> p) noexcept {
  const int n = static_cast<int>(p.size());
  BestMove best;
  for (int i = 0; i < n - 1; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double delta = swap_delta(dist, p, i, j);
      if (delta < best.delta) best = {delta, i, j};
    }
  }
  return best;
}

inline BestMove scan(const DistanceMatrix& dist, std::span<const NodeIndex> p,
                     MoveKind move) noexcept {
  return move == MoveKind::two_opt ? scan_two_opt(dist, p) : scan_two_exchange(dist, p);
}

void check_positions(const TspInstance& instance, const Tour& tour, int i, int j) {
  const int n = instance.n();
  if (static_cast<int>(tour.size()) != n) {
    throw ValidationError("tour size does not match instance");
  }
  if (i < 0 || j <= i || j > n - 1) {
    throw ValidationError("move positions must satisfy 0 <= i < j <= n-1, got (" +
                          std::to_string(i) + ", " + std::to_string(j) + ")");
  }
}

}  // namespace

double two_opt_delta(const TspInstance& instance, const Tour& tour, int i, int j) {
  check_positions(instance, tour, i, j);
  const int n = instance.n();
  if (j - i >= n - 2) {
    throw ValidationError("reversal (" + std::to_string(i) + ", " + std::to_string(j) +
                          ") leaves the loop unchanged");
  }
  const DistanceMatrix dist(instance);
  return reversal_delta(dist, tour.perm(), i, j);
}

double two_exchange_delta(const TspInstance& instance, const Tour& tour, int i, int j) {
  check_positions(instance, tour, i, j);
  const DistanceMatrix dist(instance);
  return swap_delta(dist, tour.perm(), i, j);
}

std::uint64_t neighborhood_size(MoveKind move, int n) noexcept {
  const auto m = static_cast<std::uint64_t>(n);
  if (move == MoveKind::two_opt) return n < 3 ? 0 : m * (m - 3) / 2;
  return m * (m - 1) / 2;
}

namespace detail {

InPlaceDescent descend_in_place(const DistanceMatrix& dist, std::vector<NodeIndex>& perm,
                                MoveKind move, std::optional<int> max_depth) {
  const std::uint64_t per_scan = neighborhood_size(move, static_cast<int>(perm.size()));
  InPlaceDescent out{};
  double cost = tour_length(dist, perm);
  out.start_cost = cost;
  for (;;) {
    const BestMove best = scan(dist, perm, move);
    out.neighbor_evaluations += per_scan;
    if (best.i < 0 || !(best.delta < -kImprovementEpsilon * cost)) break;
    if (max_depth && out.moves_made >= *max_depth) {
      out.hit_depth_limit = true;
      break;
    }
    if (move == MoveKind::two_opt) {
      std::reverse(perm.begin() + best.i, perm.begin() + best.j + 1);
    } else {
      std::swap(perm[best.i], perm[best.j]);
    }
    cost += best.delta;
    ++out.moves_made;
  }
  out.final_cost = cost;
  return out;
}

bool is_local_optimum(const DistanceMatrix& dist, std::span<const NodeIndex> perm,
                      MoveKind move) {
  const double cost = tour_length(dist, perm);
  const BestMove best = scan(dist, perm, move);
  return best.i < 0 || !(best.delta < -kImprovementEpsilon * cost);
}

}  // namespace detail

DescentResult descend(const TspInstance& instance, const Tour& start, MoveKind move,
                      std::optional<int> max_depth) {
  if (static_cast<int>(start.size()) != instance.n()) {
    throw ValidationError("start tour size does not match instance");
  }
  if (max_depth && *max_depth < 0) throw ValidationError("max_depth must be >= 0");
  const DistanceMatrix dist(instance);
  std::vector<NodeIndex> perm(start.perm().begin(), start.perm().end());
  const detail::InPlaceDescent run = detail::descend_in_place(dist, perm, move, max_depth);
  // Both costs are summed in canonical order so an unchanged tour reports
  // identical start and final costs.
  const double start_cost = tour_length(dist, canonicalize(start).perm());
  CanonicalTour final_tour = canonicalize(perm);
  const double final_cost = tour_length(dist, final_tour.perm());
  return DescentResult{start_cost,  std::move(final_tour), final_cost,
                       run.moves_made,  run.hit_depth_limit,   run.neighbor_evaluations};
}

bool is_local_optimum(const TspInstance& instance, const Tour& tour, MoveKind move) {
  if (static_cast<int>(tour.size()) != instance.n()) {
    throw ValidationError("tour size does not match instance");
  }
  const DistanceMatrix dist(instance);
  return detail::is_local_optimum(dist, tour.perm(), move);
}

}  // namespace tspscale
