#include <doctest.h>

#include "test_util.hpp"
#include "tspscale/datasets.hpp"
#include "tspscale/error.hpp"
#include "tspscale/sweep.hpp"

using namespace tspscale;
namespace fs = std::filesystem;

namespace {

SweepConfig small_nodes() {
  SweepConfig c;
  c.axis = SweepAxis::nodes;
  c.values = {5, 8, 12};
  c.fixed_d = 2;
  c.instances_per_point = 200;
  c.max_depth = 3;
  c.opt_method = OptMethod::parse("hybrid:20");
  c.opt_method.exact_max_nodes = 8;
  c.master_seed = 17;
  return c;
}

}  // namespace

TEST_CASE("opt method parsing") {
  CHECK(OptMethod::parse("exact_auto").kind == OptMethod::Kind::exact_auto);
  const OptMethod s = OptMethod::parse("surrogate:100");
  CHECK(s.kind == OptMethod::Kind::surrogate);
  CHECK(s.descents == 100);
  CHECK(s.str() == "surrogate:100");
  CHECK_THROWS_AS(OptMethod::parse("surrogate"), ValidationError);
  CHECK_THROWS_AS(OptMethod::parse("surrogate:0"), ValidationError);
  CHECK_THROWS_AS(OptMethod::parse("surrogate:1x"), ValidationError);
  CHECK_THROWS_AS(OptMethod::parse("concorde"), ValidationError);
}

TEST_CASE("config validation and json round trip") {
  SweepConfig c = small_nodes();
  CHECK_NOTHROW(c.validate());
  CHECK(SweepConfig::from_json(c.to_json()).to_json() == c.to_json());
  c.values = {5, 5};
  CHECK_THROWS_AS(c.validate(), ValidationError);
  c = small_nodes();
  c.instances_per_point = 0;
  CHECK_THROWS_AS(c.validate(), ValidationError);
  c = small_nodes();
  c.values = {2, 5};
  CHECK_THROWS_AS(c.validate(), ValidationError);
}

TEST_CASE("trivial sweep point") {
  SweepConfig c;
  c.values = {5};
  c.instances_per_point = 300;
  c.master_seed = 3;
  const SweepPoint p = run_sweep_point(c, 5);
  CHECK(p.ok);
  CHECK(p.s >= 0.0);
  CHECK(p.min_gap >= 0.0);
  CHECK(p.early_stop_fraction == 0.0);
  CHECK(p.opt_method == "held_karp");
}

TEST_CASE("capacity refusals are recorded per point") {
  SweepConfig c;
  c.values = {6, 19};
  c.instances_per_point = 5;
  const auto points = run_sweep(c, std::nullopt);
  REQUIRE(points.size() == 2);
  CHECK(points[0].ok);
  CHECK_FALSE(points[1].ok);
  CHECK(points[1].error.find("n <= 18") != std::string::npos);
  CHECK(sweep_csv(points).find("\n19,") == std::string::npos);
}

TEST_CASE("sweep artifacts, thread independence and resume") {
  const TempDir tmp;
  const SweepConfig c = small_nodes();
  const auto one = run_sweep(c, tmp.path / "t1", 1);
  const auto four = run_sweep(c, tmp.path / "t4", 4);
  for (const char* f : {"manifest.json", "sweep.csv", "points/5.json", "points/8.json",
                        "points/12.json"}) {
    CHECK(read_file(tmp.path / "t1" / f) == read_file(tmp.path / "t4" / f));
  }
  CHECK(one[0].opt_method == "held_karp");
  CHECK(one[2].opt_method == "surrogate:20");
  CHECK(one[2].early_stop_fraction > one[0].early_stop_fraction);

  // Resume: a deleted marker is recomputed, the rest are reused.
  const std::string csv = read_file(tmp.path / "t1" / "sweep.csv");
  fs::remove(tmp.path / "t1" / "points" / "8.json");
  write_file_atomic(tmp.path / "t1" / "points" / "12.json",
                    "{\"scale\":12,\"n\":12,\"d\":2,\"status\":\"refused\",\"error\":\"x\"}");
  const auto resumed = run_sweep(c, tmp.path / "t1", 2);
  CHECK(resumed.size() == 3);
  CHECK_FALSE(resumed[2].ok);
  CHECK(fs::exists(tmp.path / "t1" / "points" / "8.json"));
  CHECK(read_file(tmp.path / "t1" / "points" / "8.json") ==
        read_file(tmp.path / "t4" / "points" / "8.json"));

  // A changed config discards stored points.
  SweepConfig changed = c;
  changed.master_seed = 18;
  run_sweep(changed, tmp.path / "t1", 1);
  SweepConfig back = c;
  const auto fresh = run_sweep(back, tmp.path / "t1", 1);
  CHECK(fresh[2].ok);
  CHECK(read_file(tmp.path / "t1" / "sweep.csv") == csv);
}
