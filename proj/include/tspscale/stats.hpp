#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace tspscale {

/// Sample statistics of a cost distribution. sd uses the count-1 divisor and
/// is reported as 0 with sd_defined = false for a single sample.
struct CostSummary {
  std::uint64_t count;
  double mean;
  double sd;
  double min;
  double max;
  bool sd_defined;

  /// Summary known only through its first two moments (e.g. a published
  /// table row). Extremes are set to -inf/+inf.
  static CostSummary from_moments(std::uint64_t count, double mean, double sd);
};

/// Two-pass summary with a compensated first pass.
CostSummary summarize(std::span<const double> costs);

/// Streaming accumulator whose merge is consistent with summarize() on the
/// concatenated data (Chan et al. pairwise update).
class CostAccumulator {
 public:
  void add(double x) noexcept;
  void merge(const CostAccumulator& other) noexcept;
  [[nodiscard]] std::uint64_t count() const noexcept { return count_; }
  /// Throws ValidationError when empty.
  [[nodiscard]] CostSummary summary() const;

  static CostAccumulator from_summary(const CostSummary& s);

 private:
  std::uint64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
  double min_ = 0.0;
  double max_ = 0.0;
};

struct SuboptimalitySummary {
  double mu_model;
  double mu_opt;
  double s;  // mu_model - mu_opt
  double sd_model;
  double sd_opt;
  std::uint64_t count_model;
  std::uint64_t count_opt;
  /// Paired mode only: statistics of the per-instance gaps.
  std::optional<CostSummary> gap;
};

SuboptimalitySummary suboptimality(const CostSummary& model, const CostSummary& opt);

/// Paired by position: model[i] and opt[i] belong to the same instance.
SuboptimalitySummary suboptimality_paired(std::span<const double> model,
                                          std::span<const double> opt);

/// Paired mode with explicit instance ids; misaligned ids are rejected.
SuboptimalitySummary suboptimality_paired(std::span<const std::uint64_t> model_ids,
                                          std::span<const double> model,
                                          std::span<const std::uint64_t> opt_ids,
                                          std::span<const double> opt);

/// Unpooled two-sample t-test on summaries. Tail probabilities use the
/// standard normal, appropriate for the large samples this is used with;
/// the Welch-Satterthwaite df is reported for reference.
struct WelchTTest {
  double t;
  double df;
  double p_less;     // P(T < t)
  double p_greater;  // P(T > t)
  double p_two_sided;
};

WelchTTest welch_t_test(const CostSummary& a, const CostSummary& b);

double standard_normal_cdf(double z) noexcept;

struct HistogramReport {
  std::vector<double> edges;  // bins + 1 entries
  std::vector<std::uint64_t> counts;
  double mean;
  double sd;
  bool degenerate;  // all samples equal
  /// Normal pdf overlay scaled to expected counts per bin, sampled at bin
  /// centers.
  std::vector<double> overlay_x;
  std::vector<double> overlay_counts;
  /// Tick positions mean + k*sd for k = -3..3.
  std::vector<double> sd_ticks;
};

HistogramReport histogram_normal_fit(std::span<const double> costs, int bins);

}  // namespace tspscale
