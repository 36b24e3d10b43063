#include <doctest.h>

#include <cmath>
#include <random>

#include "tspscale/error.hpp"
#include "tspscale/rng.hpp"
#include "tspscale/stats.hpp"

using namespace tspscale;

TEST_CASE("summarize examples") {
  const std::vector<double> one{4.0};
  const CostSummary s1 = summarize(one);
  CHECK(s1.mean == 4.0);
  CHECK(s1.sd == 0.0);
  CHECK_FALSE(s1.sd_defined);

  const std::vector<double> three{1, 2, 3};
  const CostSummary s3 = summarize(three);
  CHECK(s3.mean == 2.0);
  CHECK(s3.sd == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(s3.sd_defined);
  CHECK(s3.min == 1.0);
  CHECK(s3.max == 3.0);
  CHECK(s3.count == 3);

  CHECK_THROWS_AS(summarize(std::vector<double>{}), ValidationError);
}

TEST_CASE("summarize is stable with a large offset") {
  std::vector<double> v;
  for (int i = 0; i < 1000; ++i) v.push_back(1e9 + (i % 2 == 0 ? 1.0 : -1.0));
  const CostSummary s = summarize(v);
  CHECK(s.mean == doctest::Approx(1e9).epsilon(1e-15));
  CHECK(s.sd == doctest::Approx(std::sqrt(1000.0 / 999.0)).epsilon(1e-9));
}

TEST_CASE("summarize is permutation invariant and merge consistent") {
  RandomStream s(3, "stats");
  std::vector<double> v(10007);
  for (double& x : v) x = 2.0 + 3.0 * s.unit();
  const CostSummary whole = summarize(v);

  std::vector<double> shuffled = v;
  std::shuffle(shuffled.begin(), shuffled.end(), s);
  const CostSummary perm = summarize(shuffled);
  CHECK(perm.mean == doctest::Approx(whole.mean).epsilon(1e-12));
  CHECK(perm.sd == doctest::Approx(whole.sd).epsilon(1e-12));

  CostAccumulator merged;
  for (std::size_t start = 0; start < v.size(); start += 997) {
    CostAccumulator shard;
    for (std::size_t i = start; i < std::min(v.size(), start + 997); ++i) shard.add(v[i]);
    merged.merge(shard);
  }
  const CostSummary m = merged.summary();
  CHECK(m.count == whole.count);
  CHECK(m.mean == doctest::Approx(whole.mean).epsilon(1e-12));
  CHECK(m.sd == doctest::Approx(whole.sd).epsilon(1e-12));
  CHECK(m.min == whole.min);
  CHECK(m.max == whole.max);

  CostAccumulator empty;
  CHECK_THROWS_AS(static_cast<void>(empty.summary()), ValidationError);
  empty.merge(merged);
  CHECK(empty.summary().mean == m.mean);
}

TEST_CASE("suboptimality") {
  const std::vector<double> opt{2.0, 3.0, 4.0};
  const std::vector<double> model{2.5, 3.0, 4.5};
  const SuboptimalitySummary self = suboptimality_paired(opt, opt);
  CHECK(self.s == 0.0);

  const SuboptimalitySummary p = suboptimality_paired(model, opt);
  CHECK(p.s == p.mu_model - p.mu_opt);
  REQUIRE(p.gap);
  CHECK(p.gap->mean == doctest::Approx(p.s).epsilon(1e-14));
  CHECK(p.gap->min == 0.0);
  CHECK(p.gap->sd == doctest::Approx(std::sqrt(1.0 / 12.0)).epsilon(1e-12));

  const SuboptimalitySummary u = suboptimality(summarize(model), summarize(opt));
  CHECK(u.s == p.s);
  CHECK_FALSE(u.gap);

  CHECK_THROWS_AS(suboptimality_paired(model, std::vector<double>{1.0, 2.0}), ValidationError);
  const std::vector<std::uint64_t> ids{0, 1, 2};
  const std::vector<std::uint64_t> bad{0, 2, 1};
  CHECK_NOTHROW(suboptimality_paired(ids, model, ids, opt));
  CHECK_THROWS_AS(suboptimality_paired(ids, model, bad, opt), ValidationError);
}

TEST_CASE("welch t-test") {
  const auto a = CostSummary::from_moments(128000, 2.86839, 0.33727);
  const auto b = CostSummary::from_moments(1280000, 2.86870, 0.33753);
  const WelchTTest t = welch_t_test(a, b);
  // Hand-computed: se = sqrt(0.33727^2/128000 + 0.33753^2/1280000).
  const double se = std::sqrt(0.33727 * 0.33727 / 128000 + 0.33753 * 0.33753 / 1280000);
  CHECK(t.t == doctest::Approx((2.86839 - 2.86870) / se).epsilon(1e-12));
  CHECK(std::abs(t.t - -0.314) < 0.001);
  CHECK(std::abs(t.p_less - 0.377) < 0.001);
  CHECK(t.p_less + t.p_greater == doctest::Approx(1.0));
  CHECK(t.p_two_sided == doctest::Approx(2 * t.p_less));
  CHECK(t.df > 1e5);

  const WelchTTest same = welch_t_test(a, a);
  CHECK(same.t == 0.0);
  CHECK(same.p_less == 0.5);
  CHECK(same.p_greater == 0.5);

  const auto flat = CostSummary::from_moments(10, 1.0, 0.0);
  CHECK(welch_t_test(flat, flat).t == 0.0);
  CHECK_THROWS_AS(welch_t_test(flat, CostSummary::from_moments(10, 2.0, 0.0)), NumericError);
  CHECK_THROWS_AS(welch_t_test(CostSummary::from_moments(1, 1.0, 0.0), a), ValidationError);
}

TEST_CASE("standard normal cdf") {
  CHECK(standard_normal_cdf(0.0) == 0.5);
  CHECK(standard_normal_cdf(1.959963984540054) == doctest::Approx(0.975).epsilon(1e-12));
  CHECK(standard_normal_cdf(-1.0) == doctest::Approx(0.15865525393145707).epsilon(1e-12));
}

TEST_CASE("histogram normal fit") {
  const std::vector<double> flat(10, 3.5);
  const HistogramReport h = histogram_normal_fit(flat, 5);
  CHECK(h.degenerate);
  int occupied = 0;
  for (auto c : h.counts) occupied += c > 0;
  CHECK(occupied == 1);

  std::mt19937_64 gen(7);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> draws(100000);
  for (double& x : draws) x = normal(gen);
  const HistogramReport r = histogram_normal_fit(draws, 40);
  CHECK_FALSE(r.degenerate);
  CHECK(std::abs(r.mean) < 0.02);
  CHECK(std::abs(r.sd - 1.0) < 0.02);
  REQUIRE(r.edges.size() == 41);
  REQUIRE(r.counts.size() == 40);
  std::uint64_t total = 0;
  for (auto c : r.counts) total += c;
  CHECK(total == draws.size());
  REQUIRE(r.overlay_x.size() == r.overlay_counts.size());
  // The overlay integrates to roughly the sample count.
  double mass = 0.0;
  for (double c : r.overlay_counts) mass += c;
  CHECK(mass == doctest::Approx(100000.0).epsilon(0.01));
  REQUIRE(r.sd_ticks.size() == 7);
  CHECK(r.sd_ticks[3] == r.mean);
  CHECK(r.sd_ticks[4] - r.sd_ticks[3] == doctest::Approx(r.sd));

  CHECK_THROWS_AS(histogram_normal_fit(std::vector<double>{1.0}, 3), ValidationError);
  CHECK_THROWS_AS(histogram_normal_fit(draws, 0), ValidationError);
}
