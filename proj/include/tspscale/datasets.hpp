#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tspscale/exact.hpp"
#include "tspscale/instance.hpp"
#include "tspscale/search.hpp"

namespace tspscale {

inline constexpr int kDatasetVersion = 1;
inline constexpr const char* kCoordinateEncoding = "float64-le";

/// manifest.json of an instance dataset directory. instances.bin holds
/// count * n * d little-endian float64 values, instance-major, row-major
/// within an instance.
struct InstanceManifest {
  int version = kDatasetVersion;
  std::uint64_t master_seed = 0;
  int n = 0;
  int d = 0;
  std::uint64_t count = 0;
  std::string coordinate_encoding = kCoordinateEncoding;
};

struct InstanceDataset {
  InstanceManifest manifest;
  std::vector<TspInstance> instances;
};

/// manifest.json of a solution dataset directory. solutions.bin holds, per
/// instance in id order, n little-endian uint16 node indices followed by one
/// little-endian float64 cost.
struct SolutionManifest {
  int version = kDatasetVersion;
  SolutionMethod method = SolutionMethod::held_karp;
  std::uint64_t master_seed = 0;
  int n = 0;
  int d = 0;
  std::uint64_t count = 0;
  std::optional<int> descents_per_instance;
  std::optional<MoveKind> move;
};

struct SolutionDataset {
  SolutionManifest manifest;
  std::vector<OptimalSolution> solutions;
};

/// Writes into a sibling staging directory and renames it over `dir` only
/// once every file is complete. Discards the staging directory if not
/// committed.
class AtomicDirectory {
 public:
  explicit AtomicDirectory(std::filesystem::path target);
  ~AtomicDirectory();
  AtomicDirectory(const AtomicDirectory&) = delete;
  AtomicDirectory& operator=(const AtomicDirectory&) = delete;

  [[nodiscard]] const std::filesystem::path& staging() const noexcept { return staging_; }
  void commit();

 private:
  std::filesystem::path target_;
  std::filesystem::path staging_;
  bool committed_ = false;
};

/// Writes `contents` to path via a temporary file and rename.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);
std::string read_file(const std::filesystem::path& path);

void write_instance_dataset(const std::filesystem::path& dir, std::uint64_t master_seed,
                            const std::vector<TspInstance>& instances);
InstanceDataset read_instance_dataset(const std::filesystem::path& dir);

void write_solution_dataset(const std::filesystem::path& dir, const SolutionManifest& manifest,
                            const std::vector<OptimalSolution>& solutions);
SolutionDataset read_solution_dataset(const std::filesystem::path& dir);

/// Raw solutions.bin produced elsewhere (e.g. converted from an external
/// solver). Validates every permutation, checks costs against the
/// instances to 1e-9 relative, and tags solutions external_import.
std::vector<OptimalSolution> import_solutions(const std::filesystem::path& bin_file,
                                              const std::vector<TspInstance>& instances);

}  // namespace tspscale
