#include "tspscale/tour.hpp"

#include <algorithm>
#include <string>

#include "tspscale/error.hpp"

namespace tspscale {

bool is_permutation_of_nodes(std::span<const NodeIndex> perm) noexcept {
  std::vector<bool> seen(perm.size(), false);
  for (const NodeIndex v : perm) {
    if (v >= perm.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Tour::Tour(std::vector<NodeIndex> perm) : perm_(std::move(perm)) {
  if (perm_.size() < 3) {
    throw ValidationError("tour needs at least 3 nodes, got " + std::to_string(perm_.size()));
  }
  if (!is_permutation_of_nodes(perm_)) {
    throw ValidationError("tour is not a permutation of 0.." + std::to_string(perm_.size() - 1));
  }
}

CanonicalTour CanonicalTour::from_canonical(std::vector<NodeIndex> perm) {
  const Tour checked(perm);
  if (perm[0] != 0 || perm[1] > perm.back()) {
    throw ValidationError("permutation is not in canonical form");
  }
  return CanonicalTour(std::move(perm));
}

std::size_t CanonicalTourHash::operator()(const CanonicalTour& t) const noexcept {
  std::uint64_t h = 0x84222325CBF29CE4ull;
  for (const NodeIndex v : t.perm()) h = mix64(h ^ v);
  return static_cast<std::size_t>(h);
}

CanonicalTour canonicalize(std::span<const NodeIndex> perm) {
  const std::size_t n = perm.size();
  const auto zero = static_cast<std::size_t>(std::find(perm.begin(), perm.end(), 0u) - perm.begin());
  std::vector<NodeIndex> out(n);
  const NodeIndex next = perm[(zero + 1) % n];
  const NodeIndex prev = perm[(zero + n - 1) % n];
  if (next < prev) {
    for (std::size_t k = 0; k < n; ++k) out[k] = perm[(zero + k) % n];
  } else {
    for (std::size_t k = 0; k < n; ++k) out[k] = perm[(zero + n - k) % n];
  }
  return CanonicalTour(std::move(out));
}

double tour_length(const DistanceMatrix& dist, std::span<const NodeIndex> perm) noexcept {
  const std::size_t n = perm.size();
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < n; ++k) total += dist(perm[k], perm[k + 1]);
  return total + dist(perm[n - 1], perm[0]);
}

namespace {

double length_on_instance(const TspInstance& instance, std::span<const NodeIndex> perm) {
  if (perm.size() != static_cast<std::size_t>(instance.n())) {
    throw ValidationError("tour size " + std::to_string(perm.size()) +
                          " does not match instance n = " + std::to_string(instance.n()));
  }
  const std::size_t n = perm.size();
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < n; ++k) total += instance.distance(perm[k], perm[k + 1]);
  return total + instance.distance(perm[n - 1], perm[0]);
}

}  // namespace

double tour_length(const TspInstance& instance, const Tour& tour) {
  return length_on_instance(instance, tour.perm());
}

double tour_length(const TspInstance& instance, const CanonicalTour& tour) {
  return length_on_instance(instance, tour.perm());
}

void random_permutation(RandomStream& stream, int n, std::vector<NodeIndex>& out) {
  if (n < 3) throw ValidationError("random tour needs n >= 3, got " + std::to_string(n));
  out.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[i] = static_cast<NodeIndex>(i);
  for (std::size_t i = out.size() - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(stream.below(i + 1));
    std::swap(out[i], out[j]);
  }
}

Tour random_tour(RandomStream& stream, int n) {
  std::vector<NodeIndex> perm;
  random_permutation(stream, n, perm);
  return Tour(std::move(perm));
}

std::uint64_t count_tours(int n) {
  if (n < 3) throw ValidationError("count_tours needs n >= 3, got " + std::to_string(n));
  // (n-1)!/2 = 3 * 4 * ... * (n-1)
  std::uint64_t result = 1;
  for (int k = 3; k <= n - 1; ++k) {
    if (__builtin_mul_overflow(result, static_cast<std::uint64_t>(k), &result)) {
      throw OverflowError("(n-1)!/2 overflows 64 bits for n = " + std::to_string(n));
    }
  }
  return result;
}

}  // namespace tspscale
