#include <doctest.h>

#include <cmath>

#include "tspscale/analytic.hpp"
#include "tspscale/error.hpp"
#include "tspscale/instance.hpp"
#include "tspscale/rng.hpp"
#include "tspscale/stats.hpp"
#include "tspscale/tour.hpp"

using namespace tspscale;

TEST_CASE("closed-form constants") {
  CHECK(std::abs(analytic::mean_edge_2d() - 0.52140) < 1e-5);
  const AnalyticReport r = analytic_constants(10, 6);
  CHECK(r.random_mean_2d == 10 * r.mu_edge_2d);
  CHECK(r.random_var_limit == 0.75);
  CHECK(std::sqrt(r.random_var_limit) == doctest::Approx(0.866).epsilon(1e-3));
  CHECK(analytic_constants(20, 2).random_var_limit == 1.5);
  CHECK(r.random_mean_upper == doctest::Approx(10.0).epsilon(1e-15));
  CHECK(r.random_mean_limit_coeff == doctest::Approx(10.0 / std::sqrt(6.0)));
  CHECK(r.random_var_2d_empirical);
  CHECK(r.xi_sq == doctest::Approx(0.276 * 0.276));
  CHECK(r.random_var_2d == doctest::Approx(10 * 0.276 * 0.276));
  CHECK_THROWS_AS(analytic_constants(2, 2), ValidationError);
  CHECK_THROWS_AS(analytic_constants(3, 0), ValidationError);
  for (double v : {r.mu_edge_2d, r.random_mean_2d, r.random_var_2d, r.xi_sq, r.random_mean_upper,
                   r.random_mean_limit_coeff, r.random_var_limit}) {
    CHECK(v > 0.0);
  }
}

TEST_CASE("mean edge length by Monte Carlo") {
  RandomStream s(21, "edge");
  double sum = 0.0;
  const int count = 2000000;
  for (int i = 0; i < count; ++i) {
    const double dx = s.unit() - s.unit();
    const double dy = s.unit() - s.unit();
    sum += std::sqrt(dx * dx + dy * dy);
  }
  CHECK(std::abs(sum / count - analytic::mean_edge_2d()) < 0.001);
}

namespace {

CostSummary random_costs(std::uint64_t seed, int n, int d, int count) {
  RandomStream starts(seed, "analytic-starts");
  CostAccumulator acc;
  for (int i = 0; i < count; ++i) {
    const TspInstance inst = generate_instance(seed, static_cast<std::uint64_t>(i), n, d);
    acc.add(tour_length(inst, random_tour(starts, n)));
  }
  return acc.summary();
}

}  // namespace

TEST_CASE("random tour mean within 3 standard errors of n * mu_edge") {
  for (int n : {5, 20, 50}) {
    const CostSummary s = random_costs(100 + n, n, 2, 100000);
    const double se = s.sd / std::sqrt(static_cast<double>(s.count));
    CHECK(std::abs(s.mean - analytic_constants(n, 2).random_mean_2d) < 3 * se);
  }
}

TEST_CASE("upper bound, high-d limit and variance convergence") {
  for (int n : {5, 10}) {
    for (int d : {2, 10, 100}) {
      CHECK(random_costs(7, n, d, 2000).mean <= analytic_constants(n, d).random_mean_upper);
    }
  }
  const CostSummary hi = random_costs(8, 10, 100, 20000);
  const AnalyticReport r = analytic_constants(10, 100);
  CHECK(std::abs(hi.mean / std::sqrt(100.0) / r.random_mean_limit_coeff - 1.0) < 0.05);
  CHECK(hi.sd >= 0.85);
  CHECK(hi.sd <= 0.89);
}
