#include "tspscale/datasets.hpp"

#include <bit>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tspscale/error.hpp"

namespace tspscale {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

template <typename U>
void append_le(std::string& out, U value) {
  for (std::size_t b = 0; b < sizeof(U); ++b) {
    out.push_back(static_cast<char>((value >> (8 * b)) & 0xFF));
  }
}

template <typename U>
U read_le(const std::string& in, std::size_t offset) {
  U value = 0;
  for (std::size_t b = 0; b < sizeof(U); ++b) {
    value |= static_cast<U>(static_cast<unsigned char>(in[offset + b])) << (8 * b);
  }
  return value;
}

json parse_json_file(const fs::path& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw ValidationError(path.string() + ": malformed JSON: " + e.what());
  }
}

template <typename T>
T required(const json& j, const char* key, const fs::path& path) {
  if (!j.contains(key)) throw ValidationError(path.string() + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ValidationError(path.string() + ": bad field '" + key + "': " + e.what());
  }
}

}  // namespace

AtomicDirectory::AtomicDirectory(fs::path target) : target_(std::move(target)) {
  staging_ = target_;
  staging_ += ".partial";
  fs::remove_all(staging_);
  if (target_.has_parent_path()) fs::create_directories(target_.parent_path());
  fs::create_directories(staging_);
}

AtomicDirectory::~AtomicDirectory() {
  if (!committed_) {
    std::error_code ec;
    fs::remove_all(staging_, ec);
  }
}

void AtomicDirectory::commit() {
  fs::remove_all(target_);
  fs::rename(staging_, target_);
  committed_ = true;
}

void write_file_atomic(const fs::path& path, const std::string& contents) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError("cannot open " + tmp.string() + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw ValidationError("failed writing " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_instance_dataset(const fs::path& dir, std::uint64_t master_seed,
                            const std::vector<TspInstance>& instances) {
  if (instances.empty()) throw ValidationError("cannot write an empty instance dataset");
  const int n = instances.front().n();
  const int d = instances.front().d();
  std::string blob;
  blob.reserve(instances.size() * static_cast<std::size_t>(n) * d * 8);
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const TspInstance& inst = instances[i];
    if (inst.n() != n || inst.d() != d || inst.instance_id() != i) {
      throw ValidationError("instance dataset must be homogeneous and ordered by id");
    }
    for (const double c : inst.coords()) append_le(blob, std::bit_cast<std::uint64_t>(c));
  }
  json manifest;
  manifest["version"] = kDatasetVersion;
  manifest["master_seed"] = master_seed;
  manifest["n"] = n;
  manifest["d"] = d;
  manifest["count"] = instances.size();
  manifest["coordinate_encoding"] = kCoordinateEncoding;

  AtomicDirectory out(dir);
  write_file_atomic(out.staging() / "instances.bin", blob);
  write_file_atomic(out.staging() / "manifest.json", manifest.dump(2) + "\n");
  out.commit();
}

InstanceDataset read_instance_dataset(const fs::path& dir) {
  const fs::path manifest_path = dir / "manifest.json";
  const json j = parse_json_file(manifest_path);
  InstanceDataset out;
  InstanceManifest& m = out.manifest;
  m.version = required<int>(j, "version", manifest_path);
  m.master_seed = required<std::uint64_t>(j, "master_seed", manifest_path);
  m.n = required<int>(j, "n", manifest_path);
  m.d = required<int>(j, "d", manifest_path);
  m.count = required<std::uint64_t>(j, "count", manifest_path);
  m.coordinate_encoding = required<std::string>(j, "coordinate_encoding", manifest_path);
  if (m.version != kDatasetVersion) {
    throw ValidationError(manifest_path.string() + ": unsupported version " +
                          std::to_string(m.version));
  }
  if (m.coordinate_encoding != kCoordinateEncoding) {
    throw ValidationError(manifest_path.string() + ": unsupported coordinate encoding '" +
                          m.coordinate_encoding + "'");
  }
  if (m.n < 3 || m.d < 1 || m.count < 1) {
    throw ValidationError(manifest_path.string() + ": invalid shape");
  }
  const std::string blob = read_file(dir / "instances.bin");
  const std::size_t per = static_cast<std::size_t>(m.n) * m.d;
  if (blob.size() != m.count * per * 8) {
    throw ValidationError((dir / "instances.bin").string() + ": size " +
                          std::to_string(blob.size()) + " does not match manifest");
  }
  out.instances.reserve(m.count);
  const std::string tag = instance_stream_tag(m.n, m.d);
  for (std::uint64_t i = 0; i < m.count; ++i) {
    std::vector<double> coords(per);
    for (std::size_t k = 0; k < per; ++k) {
      coords[k] = std::bit_cast<double>(read_le<std::uint64_t>(blob, (i * per + k) * 8));
    }
    out.instances.emplace_back(i, m.n, m.d, std::move(coords), tag);
  }
  return out;
}

void write_solution_dataset(const fs::path& dir, const SolutionManifest& manifest,
                            const std::vector<OptimalSolution>& solutions) {
  if (manifest.n > 65536) throw ValidationError("solutions.bin stores 16-bit node indices");
  if (solutions.size() != manifest.count) {
    throw ValidationError("solution count does not match manifest");
  }
  std::string blob;
  blob.reserve(solutions.size() * (static_cast<std::size_t>(manifest.n) * 2 + 8));
  for (std::size_t i = 0; i < solutions.size(); ++i) {
    const OptimalSolution& s = solutions[i];
    if (s.instance_id != i || static_cast<int>(s.tour.size()) != manifest.n) {
      throw ValidationError("solutions must be ordered by instance id and match n");
    }
    for (const NodeIndex v : s.tour.perm()) append_le(blob, static_cast<std::uint16_t>(v));
    append_le(blob, std::bit_cast<std::uint64_t>(s.cost));
  }
  json j;
  j["version"] = manifest.version;
  j["method"] = std::string(to_string(manifest.method));
  j["master_seed"] = manifest.master_seed;
  j["n"] = manifest.n;
  j["d"] = manifest.d;
  j["count"] = manifest.count;
  if (manifest.descents_per_instance) j["descents_per_instance"] = *manifest.descents_per_instance;
  if (manifest.move) j["move"] = std::string(to_string(*manifest.move));

  AtomicDirectory out(dir);
  write_file_atomic(out.staging() / "solutions.bin", blob);
  write_file_atomic(out.staging() / "manifest.json", j.dump(2) + "\n");
  out.commit();
}

namespace {

std::vector<OptimalSolution> decode_solutions(const std::string& blob, int n, std::uint64_t count,
                                              SolutionMethod method, const fs::path& source) {
  const std::size_t record = static_cast<std::size_t>(n) * 2 + 8;
  if (blob.size() != count * record) {
    throw ValidationError(source.string() + ": size " + std::to_string(blob.size()) +
                          " is not " + std::to_string(count) + " records of " +
                          std::to_string(record) + " bytes");
  }
  std::vector<OptimalSolution> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    std::vector<NodeIndex> perm(static_cast<std::size_t>(n));
    const std::size_t base = i * record;
    for (int k = 0; k < n; ++k) perm[k] = read_le<std::uint16_t>(blob, base + 2 * k);
    const double cost = std::bit_cast<double>(read_le<std::uint64_t>(blob, base + 2 * n));
    if (!is_permutation_of_nodes(perm)) {
      throw ValidationError(source.string() + ": record " + std::to_string(i) +
                            " is not a permutation");
    }
    out.push_back(OptimalSolution{i, canonicalize(perm), cost, method});
  }
  return out;
}

}  // namespace

SolutionDataset read_solution_dataset(const fs::path& dir) {
  const fs::path manifest_path = dir / "manifest.json";
  const json j = parse_json_file(manifest_path);
  SolutionDataset out;
  SolutionManifest& m = out.manifest;
  m.version = required<int>(j, "version", manifest_path);
  m.method = solution_method_from_string(required<std::string>(j, "method", manifest_path));
  m.master_seed = required<std::uint64_t>(j, "master_seed", manifest_path);
  m.n = required<int>(j, "n", manifest_path);
  m.d = required<int>(j, "d", manifest_path);
  m.count = required<std::uint64_t>(j, "count", manifest_path);
  if (j.contains("descents_per_instance")) {
    m.descents_per_instance = j["descents_per_instance"].get<int>();
  }
  if (j.contains("move")) m.move = move_kind_from_string(j["move"].get<std::string>());
  if (m.n < 3) throw ValidationError(manifest_path.string() + ": invalid n");
  const fs::path bin = dir / "solutions.bin";
  out.solutions = decode_solutions(read_file(bin), m.n, m.count, m.method, bin);
  return out;
}

std::vector<OptimalSolution> import_solutions(const fs::path& bin_file,
                                              const std::vector<TspInstance>& instances) {
  if (instances.empty()) throw ValidationError("import needs the instance dataset");
  const int n = instances.front().n();
  std::vector<OptimalSolution> out = decode_solutions(
      read_file(bin_file), n, instances.size(), SolutionMethod::external_import, bin_file);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double actual = tour_length(instances[i], out[i].tour);
    if (std::abs(actual - out[i].cost) > 1e-9 * std::max(1.0, std::abs(actual))) {
      throw ValidationError(bin_file.string() + ": record " + std::to_string(i) + " cost " +
                            std::to_string(out[i].cost) + " disagrees with tour length " +
                            std::to_string(actual));
    }
    out[i].cost = actual;
  }
  return out;
}

}  // namespace tspscale
