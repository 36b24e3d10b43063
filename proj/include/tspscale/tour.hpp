#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "tspscale/instance.hpp"
#include "tspscale/rng.hpp"

namespace tspscale {

/// A visitation order. The closing edge (perm[n-1], perm[0]) is implied.
class Tour {
 public:
  /// Throws ValidationError unless perm is a permutation of 0..n-1, n >= 3.
  explicit Tour(std::vector<NodeIndex> perm);

  [[nodiscard]] std::size_t size() const noexcept { return perm_.size(); }
  [[nodiscard]] std::span<const NodeIndex> perm() const noexcept { return perm_; }
  [[nodiscard]] NodeIndex operator[](std::size_t i) const noexcept { return perm_[i]; }

  friend bool operator==(const Tour&, const Tour&) = default;

 private:
  std::vector<NodeIndex> perm_;
};

/// Rotation- and reflection-normalized tour: perm[0] == 0 and
/// perm[1] < perm[n-1]. Two tours describing the same closed loop have equal
/// canonical forms.
class CanonicalTour {
 public:
  /// Throws ValidationError unless perm is a permutation already in
  /// canonical form.
  static CanonicalTour from_canonical(std::vector<NodeIndex> perm);

  [[nodiscard]] std::size_t size() const noexcept { return perm_.size(); }
  [[nodiscard]] std::span<const NodeIndex> perm() const noexcept { return perm_; }
  [[nodiscard]] NodeIndex operator[](std::size_t i) const noexcept { return perm_[i]; }
  [[nodiscard]] Tour as_tour() const { return Tour(perm_); }

  friend bool operator==(const CanonicalTour&, const CanonicalTour&) = default;
  friend auto operator<=>(const CanonicalTour& a, const CanonicalTour& b) {
    return a.perm_ <=> b.perm_;
  }

 private:
  friend CanonicalTour canonicalize(std::span<const NodeIndex> perm);
  explicit CanonicalTour(std::vector<NodeIndex> perm) : perm_(std::move(perm)) {}
  std::vector<NodeIndex> perm_;
};

struct CanonicalTourHash {
  std::size_t operator()(const CanonicalTour& t) const noexcept;
};

/// True when perm is a permutation of 0..perm.size()-1.
bool is_permutation_of_nodes(std::span<const NodeIndex> perm) noexcept;

/// Total Euclidean length including the closing edge.
double tour_length(const TspInstance& instance, const Tour& tour);
double tour_length(const TspInstance& instance, const CanonicalTour& tour);
/// Unchecked variant on a precomputed table; sums edges in position order.
double tour_length(const DistanceMatrix& dist, std::span<const NodeIndex> perm) noexcept;

/// Uniform random permutation (Fisher-Yates).
Tour random_tour(RandomStream& stream, int n);
/// Same shuffle, written into an existing buffer (resized to n).
void random_permutation(RandomStream& stream, int n, std::vector<NodeIndex>& out);

/// Rotate node 0 to the front, then orient so perm[1] < perm[n-1].
CanonicalTour canonicalize(std::span<const NodeIndex> perm);
inline CanonicalTour canonicalize(const Tour& tour) { return canonicalize(tour.perm()); }

/// Number of distinct undirected tours, (n-1)!/2. Throws OverflowError when
/// the result does not fit in 64 bits.
std::uint64_t count_tours(int n);

}  // namespace tspscale
