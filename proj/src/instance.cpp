#include "tspscale/instance.hpp"

#include <cmath>
#include <string>

#include "tspscale/error.hpp"
#include "tspscale/parallel.hpp"
#include "tspscale/rng.hpp"

namespace tspscale {

TspInstance::TspInstance(std::uint64_t instance_id, int n, int d, std::vector<double> coords,
                         std::string seed_tag)
    : instance_id_(instance_id), n_(n), d_(d), coords_(std::move(coords)),
      seed_tag_(std::move(seed_tag)) {
  if (n < 3) throw ValidationError("instance needs n >= 3 nodes, got " + std::to_string(n));
  if (d < 1) throw ValidationError("instance needs d >= 1 dimensions, got " + std::to_string(d));
  if (coords_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(d)) {
    throw ValidationError("instance coordinate count " + std::to_string(coords_.size()) +
                          " != n*d = " + std::to_string(static_cast<long long>(n) * d));
  }
  for (const double c : coords_) {
    if (!(c >= 0.0 && c <= 1.0)) {
      throw ValidationError("instance coordinate outside [0,1]: " + std::to_string(c));
    }
  }
}

double TspInstance::distance(NodeIndex a, NodeIndex b) const noexcept {
  const double* pa = coords_.data() + static_cast<std::size_t>(a) * d_;
  const double* pb = coords_.data() + static_cast<std::size_t>(b) * d_;
  double sum = 0.0;
  for (int k = 0; k < d_; ++k) {
    const double diff = pa[k] - pb[k];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

DistanceMatrix::DistanceMatrix(const TspInstance& instance)
    : n_(instance.n()), table_(static_cast<std::size_t>(n_) * n_, 0.0) {
  for (int a = 0; a < n_; ++a) {
    for (int b = a + 1; b < n_; ++b) {
      const double dist = instance.distance(a, b);
      table_[static_cast<std::size_t>(a) * n_ + b] = dist;
      table_[static_cast<std::size_t>(b) * n_ + a] = dist;
    }
  }
}

std::string instance_stream_tag(int n, int d) {
  return "instances/n=" + std::to_string(n) + "/d=" + std::to_string(d);
}

TspInstance generate_instance(std::uint64_t master_seed, std::uint64_t instance_id, int n,
                              int d) {
  if (n < 3) throw ValidationError("n must be >= 3 (tour undefined below), got " + std::to_string(n));
  if (d < 1) throw ValidationError("d must be >= 1, got " + std::to_string(d));
  const std::string tag = instance_stream_tag(n, d);
  RandomStream stream = RandomStream(master_seed, tag).at(instance_id);
  std::vector<double> coords(static_cast<std::size_t>(n) * d);
  for (double& c : coords) c = stream.unit();
  return TspInstance(instance_id, n, d, std::move(coords), tag);
}

std::vector<TspInstance> generate_instances(std::uint64_t master_seed, int n, int d,
                                            std::uint64_t count, unsigned threads) {
  if (count == 0) throw ValidationError("instance count must be >= 1");
  // Validate once up front so the error is not raised from a worker.
  (void)generate_instance(master_seed, 0, n, d);
  std::vector<TspInstance> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    out.emplace_back(i, n, d, std::vector<double>(static_cast<std::size_t>(n) * d, 0.0));
  }
  parallel_for(count, threads, [&](std::size_t i) {
    out[i] = generate_instance(master_seed, i, n, d);
  });
  return out;
}

}  // namespace tspscale
