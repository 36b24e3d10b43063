#include <doctest.h>

#include <fstream>

#include "tspscale/datasets.hpp"
#include "tspscale/error.hpp"
#include "tspscale/exact.hpp"
#include "tspscale/surrogate.hpp"
#include "test_util.hpp"

using namespace tspscale;
namespace fs = std::filesystem;

TEST_CASE("instance dataset round trip") {
  const TempDir tmp;
  const auto insts = generate_instances(42, 9, 3, 25);
  write_instance_dataset(tmp.path / "a", 42, insts);
  const InstanceDataset ds = read_instance_dataset(tmp.path / "a");
  CHECK(ds.manifest.n == 9);
  CHECK(ds.manifest.d == 3);
  CHECK(ds.manifest.count == 25);
  CHECK(ds.manifest.master_seed == 42);
  REQUIRE(ds.instances.size() == 25);
  for (std::size_t i = 0; i < insts.size(); ++i) {
    CHECK(std::equal(insts[i].coords().begin(), insts[i].coords().end(),
                     ds.instances[i].coords().begin()));
  }
  CHECK(fs::file_size(tmp.path / "a" / "instances.bin") == 25 * 9 * 3 * 8);
  CHECK_FALSE(fs::exists(tmp.path / "a.partial"));

  write_instance_dataset(tmp.path / "b", 42, generate_instances(42, 9, 3, 25, 3));
  CHECK(read_file(tmp.path / "a" / "instances.bin") == read_file(tmp.path / "b" / "instances.bin"));
  CHECK(read_file(tmp.path / "a" / "manifest.json") == read_file(tmp.path / "b" / "manifest.json"));

  // First coordinate stored little-endian.
  const std::string blob = read_file(tmp.path / "a" / "instances.bin");
  double first = 0.0;
  std::memcpy(&first, blob.data(), 8);
  CHECK(first == insts[0].coords()[0]);
}

TEST_CASE("corrupt datasets are rejected") {
  const TempDir tmp;
  write_instance_dataset(tmp.path / "a", 1, generate_instances(1, 5, 2, 3));
  {
    std::ofstream out(tmp.path / "a" / "instances.bin", std::ios::binary | std::ios::app);
    out << "x";
  }
  CHECK_THROWS_AS(read_instance_dataset(tmp.path / "a"), ValidationError);
  CHECK_THROWS_AS(read_instance_dataset(tmp.path / "missing"), ValidationError);
}

TEST_CASE("solution datasets, atomic finalize and import") {
  const TempDir tmp;
  const auto insts = generate_instances(5, 8, 2, 40);
  write_instance_dataset(tmp.path / "inst", 5, insts);
  const SolutionDataset exact = build_solution_dataset(tmp.path / "inst", SolveMethod::exact(),
                                                       tmp.path / "exact");
  CHECK(exact.manifest.method == SolutionMethod::held_karp);
  CHECK(fs::file_size(tmp.path / "exact" / "solutions.bin") == 40 * (8 * 2 + 8));
  const SolutionDataset read = read_solution_dataset(tmp.path / "exact");
  REQUIRE(read.solutions.size() == 40);
  for (std::size_t i = 0; i < insts.size(); ++i) {
    CHECK(read.solutions[i].cost == brute_force_optimal(insts[i]).cost);
    CHECK(read.solutions[i].tour == exact.solutions[i].tour);
  }

  const SolutionDataset sur = build_solution_dataset(
      tmp.path / "inst", SolveMethod::best_of({100, MoveKind::two_opt}), tmp.path / "sur", 2);
  CHECK(sur.manifest.method == SolutionMethod::surrogate);
  CHECK(sur.manifest.descents_per_instance == 100);
  const SolutionDataset sur_again = build_solution_dataset(
      tmp.path / "inst", SolveMethod::best_of({100, MoveKind::two_opt}), tmp.path / "sur2", 1);
  CHECK(read_file(tmp.path / "sur" / "solutions.bin") ==
        read_file(tmp.path / "sur2" / "solutions.bin"));
  for (std::size_t i = 0; i < insts.size(); ++i) {
    CHECK(sur.solutions[i].cost >= exact.solutions[i].cost - 1e-12);
  }

  const auto imported = import_solutions(tmp.path / "exact" / "solutions.bin", insts);
  CHECK(imported[3].method == SolutionMethod::external_import);
  CHECK(imported[3].cost == exact.solutions[3].cost);

  // A refused build leaves nothing behind.
  write_instance_dataset(tmp.path / "big", 5, generate_instances(5, 19, 2, 2));
  CHECK_THROWS_AS(
      build_solution_dataset(tmp.path / "big", SolveMethod::exact(), tmp.path / "big_out"),
      CapacityError);
  CHECK_FALSE(fs::exists(tmp.path / "big_out"));
  CHECK_FALSE(fs::exists(tmp.path / "big_out.partial"));

  // Tampered cost is caught on import.
  std::string blob = read_file(tmp.path / "exact" / "solutions.bin");
  blob[8 * 2 + 6] ^= 0x40;
  write_file_atomic(tmp.path / "bad.bin", blob);
  CHECK_THROWS_AS(import_solutions(tmp.path / "bad.bin", insts), ValidationError);
}
