#include "tspscale/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "tspscale/error.hpp"

namespace tspscale {

CostSummary CostSummary::from_moments(std::uint64_t count, double mean, double sd) {
  if (count < 1) throw ValidationError("summary count must be >= 1");
  if (!(sd >= 0.0)) throw ValidationError("summary sd must be >= 0");
  return CostSummary{count,
                     mean,
                     sd,
                     -std::numeric_limits<double>::infinity(),
                     std::numeric_limits<double>::infinity(),
                     count >= 2};
}

CostSummary summarize(std::span<const double> costs) {
  if (costs.empty()) throw ValidationError("summarize: empty input");
  // Neumaier-compensated sum for the mean.
  double sum = 0.0;
  double carry = 0.0;
  double lo = costs.front();
  double hi = costs.front();
  for (const double x : costs) {
    const double t = sum + x;
    carry += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  const auto count = static_cast<double>(costs.size());
  double mean = (sum + carry) / count;
  mean = std::clamp(mean, lo, hi);
  double sq = 0.0;
  double lin = 0.0;
  for (const double x : costs) {
    const double dev = x - mean;
    sq += dev * dev;
    lin += dev;
  }
  CostSummary out{costs.size(), mean, 0.0, lo, hi, costs.size() >= 2};
  if (out.sd_defined) {
    // Corrected two-pass formula removes the residual bias of the mean.
    const double var = (sq - lin * lin / count) / (count - 1.0);
    out.sd = std::sqrt(std::max(0.0, var));
  }
  return out;
}

void CostAccumulator::add(double x) noexcept {
  if (count_ == 0) {
    min_ = max_ = x;
  } else {
    min_ = std::min(min_, x);
    max_ = std::max(max_, x);
  }
  ++count_;
  const double delta = x - mean_;
  mean_ += delta / static_cast<double>(count_);
  m2_ += delta * (x - mean_);
}

void CostAccumulator::merge(const CostAccumulator& other) noexcept {
  if (other.count_ == 0) return;
  if (count_ == 0) {
    *this = other;
    return;
  }
  const auto na = static_cast<double>(count_);
  const auto nb = static_cast<double>(other.count_);
  const double total = na + nb;
  const double delta = other.mean_ - mean_;
  mean_ = (na * mean_ + nb * other.mean_) / total;
  m2_ += other.m2_ + delta * delta * na * nb / total;
  count_ += other.count_;
  min_ = std::min(min_, other.min_);
  max_ = std::max(max_, other.max_);
}

CostSummary CostAccumulator::summary() const {
  if (count_ == 0) throw ValidationError("summary of empty accumulator");
  CostSummary out{count_, mean_, 0.0, min_, max_, count_ >= 2};
  if (out.sd_defined) out.sd = std::sqrt(std::max(0.0, m2_ / static_cast<double>(count_ - 1)));
  return out;
}

CostAccumulator CostAccumulator::from_summary(const CostSummary& s) {
  CostAccumulator acc;
  acc.count_ = s.count;
  acc.mean_ = s.mean;
  acc.m2_ = s.sd_defined ? s.sd * s.sd * static_cast<double>(s.count - 1) : 0.0;
  acc.min_ = s.min;
  acc.max_ = s.max;
  return acc;
}

SuboptimalitySummary suboptimality(const CostSummary& model, const CostSummary& opt) {
  return SuboptimalitySummary{model.mean, opt.mean,    model.mean - opt.mean,
                              model.sd,   opt.sd,      model.count,
                              opt.count,  std::nullopt};
}

SuboptimalitySummary suboptimality_paired(std::span<const double> model,
                                          std::span<const double> opt) {
  if (model.size() != opt.size()) {
    throw ValidationError("paired suboptimality needs equal counts (" +
                          std::to_string(model.size()) + " vs " + std::to_string(opt.size()) +
                          ")");
  }
  std::vector<double> gaps(model.size());
  for (std::size_t i = 0; i < model.size(); ++i) gaps[i] = model[i] - opt[i];
  SuboptimalitySummary out = suboptimality(summarize(model), summarize(opt));
  out.gap = summarize(gaps);
  return out;
}

SuboptimalitySummary suboptimality_paired(std::span<const std::uint64_t> model_ids,
                                          std::span<const double> model,
                                          std::span<const std::uint64_t> opt_ids,
                                          std::span<const double> opt) {
  if (model_ids.size() != model.size() || opt_ids.size() != opt.size()) {
    throw ValidationError("paired suboptimality: id and cost counts differ");
  }
  if (model_ids.size() != opt_ids.size()) {
    throw ValidationError("paired suboptimality needs equal counts");
  }
  for (std::size_t i = 0; i < model_ids.size(); ++i) {
    if (model_ids[i] != opt_ids[i]) {
      throw ValidationError("paired suboptimality: instance ids misaligned at position " +
                            std::to_string(i));
    }
  }
  return suboptimality_paired(model, opt);
}

double standard_normal_cdf(double z) noexcept {
  return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

WelchTTest welch_t_test(const CostSummary& a, const CostSummary& b) {
  if (a.count < 2 || b.count < 2) throw ValidationError("t-test needs count >= 2 per sample");
  const double va = a.sd * a.sd / static_cast<double>(a.count);
  const double vb = b.sd * b.sd / static_cast<double>(b.count);
  const double se2 = va + vb;
  if (se2 == 0.0) {
    if (a.mean == b.mean) return WelchTTest{0.0, 0.0, 0.5, 0.5, 1.0};
    throw NumericError("t-test degenerate: zero variance with unequal means");
  }
  const double t = (a.mean - b.mean) / std::sqrt(se2);
  const double df = se2 * se2 /
                    (va * va / static_cast<double>(a.count - 1) +
                     vb * vb / static_cast<double>(b.count - 1));
  const double p_less = standard_normal_cdf(t);
  return WelchTTest{t, df, p_less, standard_normal_cdf(-t), 2.0 * standard_normal_cdf(-std::abs(t))};
}

HistogramReport histogram_normal_fit(std::span<const double> costs, int bins) {
  if (costs.size() < 2) throw ValidationError("histogram needs at least 2 samples");
  if (bins < 1) throw ValidationError("histogram needs bins >= 1");
  const CostSummary s = summarize(costs);
  HistogramReport out;
  out.mean = s.mean;
  out.sd = s.sd;
  out.degenerate = s.max == s.min;
  out.counts.assign(static_cast<std::size_t>(bins), 0);
  out.edges.resize(static_cast<std::size_t>(bins) + 1);
  const double width = (s.max - s.min) / bins;
  for (int b = 0; b <= bins; ++b) out.edges[b] = s.min + width * b;
  out.edges.back() = s.max;
  for (const double x : costs) {
    int b = out.degenerate ? 0 : static_cast<int>((x - s.min) / width);
    b = std::clamp(b, 0, bins - 1);
    ++out.counts[b];
  }
  for (int k = -3; k <= 3; ++k) out.sd_ticks.push_back(s.mean + k * s.sd);
  if (!out.degenerate) {
    const double norm = static_cast<double>(costs.size()) * width /
                        (s.sd * std::sqrt(2.0 * std::numbers::pi));
    for (int b = 0; b < bins; ++b) {
      const double x = 0.5 * (out.edges[b] + out.edges[b + 1]);
      const double z = (x - s.mean) / s.sd;
      out.overlay_x.push_back(x);
      out.overlay_counts.push_back(norm * std::exp(-0.5 * z * z));
    }
  }
  return out;
}

}  // namespace tspscale
