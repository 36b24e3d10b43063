#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace tspscale {

using NodeIndex = std::uint32_t;

/// n points in the d-dimensional unit hypercube. Coordinates are row-major:
/// point i occupies coords[i*d, (i+1)*d).
class TspInstance {
 public:
  TspInstance(std::uint64_t instance_id, int n, int d, std::vector<double> coords,
              std::string seed_tag = {});

  [[nodiscard]] std::uint64_t instance_id() const noexcept { return instance_id_; }
  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] int d() const noexcept { return d_; }
  [[nodiscard]] std::span<const double> coords() const noexcept { return coords_; }
  [[nodiscard]] std::span<const double> point(NodeIndex i) const noexcept {
    return {coords_.data() + static_cast<std::size_t>(i) * d_, static_cast<std::size_t>(d_)};
  }
  [[nodiscard]] const std::string& seed_tag() const noexcept { return seed_tag_; }

  /// Euclidean distance between nodes a and b.
  [[nodiscard]] double distance(NodeIndex a, NodeIndex b) const noexcept;

 private:
  std::uint64_t instance_id_;
  int n_;
  int d_;
  std::vector<double> coords_;
  std::string seed_tag_;
};

/// Dense symmetric distance table, computed once per instance.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const TspInstance& instance);

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] double operator()(NodeIndex a, NodeIndex b) const noexcept {
    return table_[static_cast<std::size_t>(a) * n_ + b];
  }

 private:
  int n_;
  std::vector<double> table_;
};

/// Stream tag for (n, d) datasets. Mixing the shape into the tag keeps
/// datasets of different shapes drawn from the same master seed independent.
std::string instance_stream_tag(int n, int d);

/// Regenerates instance `instance_id` of the (master_seed, n, d) dataset.
TspInstance generate_instance(std::uint64_t master_seed, std::uint64_t instance_id, int n,
                              int d);

/// Instances 0..count-1 of the (master_seed, n, d) dataset. Output is
/// independent of `threads`.
std::vector<TspInstance> generate_instances(std::uint64_t master_seed, int n, int d,
                                            std::uint64_t count, unsigned threads = 1);

}  // namespace tspscale
