#include <doctest.h>

#include "tspscale/error.hpp"
#include "tspscale/exact.hpp"
#include "tspscale/surrogate.hpp"

using namespace tspscale;

TEST_CASE("surrogate basics") {
  CHECK_THROWS_AS((SurrogateConfig{0, MoveKind::two_opt}.validate()), ValidationError);
  CHECK(default_surrogate_descents(10) == 100);
  CHECK(default_surrogate_descents(20) == 1000);

  const TspInstance tri = generate_instance(1, 4, 3, 2);
  const OptimalSolution s =
      surrogate_optimal(tri, {1, MoveKind::two_opt}, surrogate_stream(1, 3, 2).at(4));
  CHECK(s.cost == held_karp_optimal(tri).cost);
  CHECK(s.method == SolutionMethod::surrogate);
  CHECK(s.instance_id == 4);
}

TEST_CASE("surrogate dominates exact and improves with k") {
  const auto insts = generate_instances(10, 10, 2, 200);
  const RandomStream stream = surrogate_stream(10, 10, 2);
  int matches100 = 0;
  for (const auto& inst : insts) {
    const double exact = held_karp_optimal(inst).cost;
    double prev_gap = 1e9;
    int prev_match = 0;
    for (int k : {1, 5, 20, 100}) {
      const OptimalSolution s =
          surrogate_optimal(inst, {k, MoveKind::two_opt}, stream.at(inst.instance_id()));
      const double gap = s.cost - exact;
      CHECK(gap >= -1e-12);
      CHECK(gap <= prev_gap);
      const int match = gap <= 1e-12 * exact ? 1 : 0;
      CHECK(match >= prev_match);
      prev_gap = gap;
      prev_match = match;
      if (k == 100) matches100 += match;
    }
  }
  // Best of 100 finds the optimum on the large majority of 10-node instances.
  CHECK(matches100 > 190);
}

TEST_CASE("solve_instances dispatch and determinism") {
  const auto insts = generate_instances(3, 8, 2, 300);
  const auto exact = solve_instances(insts, SolveMethod::exact(), 3);
  for (std::size_t i = 0; i < insts.size(); ++i) {
    CHECK(exact[i].cost == brute_force_optimal(insts[i]).cost);
    CHECK(exact[i].instance_id == i);
  }
  const auto sur = solve_instances(insts, SolveMethod::best_of({100, MoveKind::two_opt}), 3);
  const auto sur4 = solve_instances(insts, SolveMethod::best_of({100, MoveKind::two_opt}), 3, 4);
  for (std::size_t i = 0; i < insts.size(); ++i) {
    CHECK(sur[i].cost >= exact[i].cost - 1e-12);
    CHECK(sur[i].tour == sur4[i].tour);
    CHECK(sur[i].cost == sur4[i].cost);
  }
  const auto big = generate_instances(3, 19, 2, 2);
  CHECK_THROWS_AS(solve_instances(big, SolveMethod::exact(), 3), CapacityError);
}

TEST_CASE("validate_surrogate on table rows") {
  const WelchTTest t10 = validate_surrogate(CostSummary::from_moments(128000, 2.86839, 0.33727),
                                            CostSummary::from_moments(1280000, 2.86870, 0.33753));
  CHECK(std::abs(t10.t - -0.314) < 0.001);
  const WelchTTest t20 = validate_surrogate(CostSummary::from_moments(64000, 3.82970, 0.30534),
                                            CostSummary::from_moments(1280000, 3.83082, 0.30478));
  CHECK(std::abs(t20.t - -0.906) < 0.001);
  CHECK(std::abs(t20.p_less - 0.183) < 0.001);
}
