#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "tspscale/error.hpp"
#include "tspscale/exact.hpp"
#include "tspscale/instance.hpp"
#include "tspscale/tour.hpp"

using namespace tspscale;

TEST_CASE("square and triangle") {
  // Corners listed out of tour order.
  const TspInstance sq(0, 4, 2, {0, 0, 1, 1, 1, 0, 0, 1});
  for (const OptimalSolution& s : {brute_force_optimal(sq), held_karp_optimal(sq)}) {
    CHECK(s.cost == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(std::vector<NodeIndex>(s.tour.perm().begin(), s.tour.perm().end()) ==
          std::vector<NodeIndex>{0, 2, 1, 3});
  }
  CHECK(brute_force_optimal(sq).method == SolutionMethod::brute);
  CHECK(held_karp_optimal(sq).method == SolutionMethod::held_karp);

  const TspInstance tri(5, 3, 2, {0, 0, 1, 0, 0, 1});
  const OptimalSolution t = held_karp_optimal(tri);
  CHECK(t.cost == doctest::Approx(2.0 + std::sqrt(2.0)));
  CHECK(t.instance_id == 5);
  CHECK(brute_force_optimal(tri).tour == t.tour);
}

TEST_CASE("capacity refusals") {
  const TspInstance big = generate_instance(1, 0, 12, 2);
  CHECK_THROWS_AS(brute_force_optimal(big), CapacityError);
  const TspInstance huge = generate_instance(1, 0, 19, 2);
  CHECK_THROWS_AS(held_karp_optimal(huge), CapacityError);
  CHECK_THROWS_AS(held_karp_optimal(big, 11), CapacityError);
  try {
    held_karp_optimal(huge);
  } catch (const CapacityError& e) {
    CHECK(std::string(e.what()).find("MiB") != std::string::npos);
  }
}

TEST_CASE("held-karp matches brute force and the enumeration oracle") {
  for (int n = 4; n <= 9; ++n) {
    const auto insts = generate_instances(77, n, 2, 40);
    for (const auto& inst : insts) {
      const OptimalSolution hk = held_karp_optimal(inst);
      const OptimalSolution bf = brute_force_optimal(inst);
      REQUIRE(hk.cost == bf.cost);
      REQUIRE(hk.tour == bf.tour);
      CHECK(hk.cost == doctest::Approx(oracle::brute_min_cost(inst)).epsilon(1e-12));
      CHECK(tour_length(inst, hk.tour) == doctest::Approx(hk.cost).epsilon(1e-12));
    }
  }
}

TEST_CASE("held-karp beyond brute-force range is locally consistent") {
  const TspInstance inst = generate_instance(5, 3, 13, 3);
  const OptimalSolution hk = held_karp_optimal(inst);
  CHECK(tour_length(inst, hk.tour) == doctest::Approx(hk.cost).epsilon(1e-12));
  CHECK(oracle::is_local_opt(inst, {hk.tour.perm().begin(), hk.tour.perm().end()}, true));
  CHECK(oracle::is_local_opt(inst, {hk.tour.perm().begin(), hk.tour.perm().end()}, false));
}

TEST_CASE("solution method names") {
  for (auto m : {SolutionMethod::brute, SolutionMethod::held_karp, SolutionMethod::external_import,
                 SolutionMethod::surrogate}) {
    CHECK(solution_method_from_string(to_string(m)) == m);
  }
  CHECK_THROWS_AS(solution_method_from_string("concorde"), ValidationError);
}
