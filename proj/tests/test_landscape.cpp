#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "tspscale/error.hpp"
#include "tspscale/exact.hpp"
#include "tspscale/landscape.hpp"

using namespace tspscale;

namespace {

std::set<oracle::Perm> reached(const LandscapeCensus& c) {
  std::set<oracle::Perm> out;
  for (const auto& t : c.optima) out.emplace(t.perm().begin(), t.perm().end());
  return out;
}

std::set<oracle::Perm> enumerated_optima(const TspInstance& inst, bool two_opt) {
  std::set<oracle::Perm> out;
  for (const auto& p : oracle::all_canonical_tours(inst.n())) {
    if (oracle::is_local_opt(inst, p, two_opt)) out.insert(p);
  }
  return out;
}

}  // namespace

TEST_CASE("n = 3 census is trivial") {
  const TspInstance tri = generate_instance(1, 0, 3, 2);
  const LandscapeCensus c = census(tri, MoveKind::two_opt, 50, RandomStream(1, "census"));
  CHECK(c.unique_optima == 1);
  CHECK(c.blo_visits == 50);
  CHECK(c.mean_depth == 0.0);
  CHECK_THROWS_AS(census(tri, MoveKind::two_opt, 0, RandomStream(1, "census")), ValidationError);
}

TEST_CASE("census optima match exhaustive enumeration at n = 7") {
  for (std::uint64_t id = 0; id < 3; ++id) {
    const TspInstance inst = generate_instance(70, id, 7, 2);
    REQUIRE(oracle::all_canonical_tours(7).size() == 360);
    for (MoveKind move : {MoveKind::two_opt, MoveKind::two_exchange}) {
      const LandscapeCensus c = census(inst, move, 10000, RandomStream(70, "census").at(id));
      CHECK(reached(c) == enumerated_optima(inst, move == MoveKind::two_opt));
      CHECK(c.unique_optima == c.optima.size());
      CHECK(c.blo_cost == doctest::Approx(held_karp_optimal(inst).cost).epsilon(1e-12));
    }
  }
}

TEST_CASE("census invariants and determinism") {
  const TspInstance inst = generate_instance(5, 2, 12, 2);
  const RandomStream stream(5, "census");
  const LandscapeCensus a = census(inst, MoveKind::two_opt, 400, stream);
  const LandscapeCensus b = census(inst, MoveKind::two_opt, 400, stream, 4);
  CHECK(a.optima == b.optima);
  CHECK(a.blo_visits == b.blo_visits);
  CHECK(a.mean_depth == b.mean_depth);
  CHECK(a.unique_optima >= 1);
  CHECK(a.unique_optima <= a.descents);
  double min_cost = 1e9;
  for (const auto& t : a.optima) min_cost = std::min(min_cost, tour_length(inst, t));
  CHECK(a.blo_cost == min_cost);
  CHECK(tour_length(inst, a.blo_tour) == a.blo_cost);
  CHECK(a.blo_cost >= held_karp_optimal(inst).cost - 1e-12);
  CHECK(a.blo_visits >= 1);

  // Monotone discovery over a shared stream prefix.
  std::uint64_t prev = 0;
  for (std::uint64_t k : {1, 10, 50, 200, 400}) {
    const LandscapeCensus c = census(inst, MoveKind::two_opt, k, stream);
    CHECK(c.unique_optima >= prev);
    prev = c.unique_optima;
  }
  CHECK(prev == a.unique_optima);
}

TEST_CASE("aggregate_census") {
  const TspInstance inst = generate_instance(6, 0, 9, 2);
  const LandscapeCensus c = census(inst, MoveKind::two_opt, 100, RandomStream(6, "c"));
  const std::vector<LandscapeCensus> one{c};
  const LandscapeSummary s1 = aggregate_census(one);
  CHECK(s1.mean_unique_optima == static_cast<double>(c.unique_optima));
  CHECK(s1.mean_blo_rate == static_cast<double>(c.blo_visits) / 100.0);
  CHECK(s1.mean_depth == c.mean_depth);
  CHECK_FALSE(s1.sd_defined);

  const std::vector<LandscapeCensus> two{c, c};
  const LandscapeSummary s2 = aggregate_census(two);
  CHECK(s2.sd_defined);
  CHECK(s2.sd_unique_optima == 0.0);
  CHECK(s2.sd_blo_rate == 0.0);
  CHECK(s2.sd_depth == 0.0);

  const LandscapeCensus other = census(inst, MoveKind::two_opt, 50, RandomStream(6, "c"));
  const std::vector<LandscapeCensus> mixed{c, other};
  CHECK_THROWS_AS(aggregate_census(mixed), ValidationError);
  CHECK_THROWS_AS(aggregate_census(std::span<const LandscapeCensus>{}), ValidationError);
}

TEST_CASE("local optima count grows with n") {
  double u10 = 0.0, u20 = 0.0;
  for (std::uint64_t id = 0; id < 32; ++id) {
    u10 += census(generate_instance(8, id, 10, 2), MoveKind::two_opt, 200,
                  RandomStream(8, "grow").at(id))
               .unique_optima;
    u20 += census(generate_instance(8, id, 20, 2), MoveKind::two_opt, 200,
                  RandomStream(8, "grow").at(id))
               .unique_optima;
  }
  CHECK(u20 > u10);
}

TEST_CASE("blo rate is one when the optimum is unique") {
  for (std::uint64_t id = 0; id < 50; ++id) {
    const LandscapeCensus c =
        census(generate_instance(2, id, 5, 2), MoveKind::two_opt, 60, RandomStream(2, "r").at(id));
    if (c.unique_optima == 1) CHECK(c.blo_visits == c.descents);
    CHECK(c.blo_visits > 0);
    CHECK(c.blo_visits <= c.descents);
  }
}
