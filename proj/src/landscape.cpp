#include "tspscale/landscape.hpp"

#include <algorithm>
#include <cmath>

#include "tspscale/error.hpp"
#include "tspscale/parallel.hpp"
#include "tspscale/stats.hpp"

namespace tspscale {

LandscapeCensus census(const TspInstance& instance, MoveKind move, std::uint64_t descents,
                       const RandomStream& stream, unsigned threads) {
  if (descents < 1) throw ValidationError("census needs at least one descent");
  const DistanceMatrix dist(instance);
  const auto n = static_cast<std::size_t>(instance.n());

  std::vector<NodeIndex> finals(descents * n);
  std::vector<double> costs(descents);
  std::vector<int> depths(descents);
  parallel_for(descents, threads, [&](std::size_t k) {
    RandomStream start_stream = stream.at(k);
    std::vector<NodeIndex> perm;
    random_permutation(start_stream, instance.n(), perm);
    const auto run = detail::descend_in_place(dist, perm, move, std::nullopt);
    const CanonicalTour canonical = canonicalize(perm);
    std::copy(canonical.perm().begin(), canonical.perm().end(), finals.begin() + k * n);
    costs[k] = tour_length(dist, canonical.perm());
    depths[k] = run.moves_made;
  });

  std::vector<std::size_t> order(descents);
  for (std::size_t k = 0; k < descents; ++k) order[k] = k;
  auto tour_at = [&](std::size_t k) {
    return std::span<const NodeIndex>(finals.data() + k * n, n);
  };
  auto tour_less = [&](std::size_t a, std::size_t b) {
    const auto ta = tour_at(a);
    const auto tb = tour_at(b);
    if (std::lexicographical_compare(ta.begin(), ta.end(), tb.begin(), tb.end())) return true;
    if (std::lexicographical_compare(tb.begin(), tb.end(), ta.begin(), ta.end())) return false;
    return a < b;
  };
  std::sort(order.begin(), order.end(), tour_less);

  std::vector<CanonicalTour> optima;
  std::vector<std::uint64_t> visits;
  std::vector<double> optimum_cost;
  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    const auto current = tour_at(order[idx]);
    if (idx == 0 || !std::equal(current.begin(), current.end(), tour_at(order[idx - 1]).begin())) {
      optima.push_back(
          CanonicalTour::from_canonical(std::vector<NodeIndex>(current.begin(), current.end())));
      visits.push_back(0);
      optimum_cost.push_back(costs[order[idx]]);
    }
    ++visits.back();
  }

  // Optima are sorted, so the first minimum-cost entry is the
  // lexicographically smallest among exact cost ties.
  std::size_t blo = 0;
  for (std::size_t u = 1; u < optima.size(); ++u) {
    if (optimum_cost[u] < optimum_cost[blo]) blo = u;
  }
  std::uint64_t total_depth = 0;
  for (const int depth : depths) total_depth += static_cast<std::uint64_t>(depth);

  LandscapeCensus out{instance.instance_id(),
                      instance.n(),
                      instance.d(),
                      move,
                      descents,
                      optima.size(),
                      optima[blo],
                      optimum_cost[blo],
                      visits[blo],
                      static_cast<double>(total_depth) / static_cast<double>(descents),
                      {}};
  out.optima = std::move(optima);
  return out;
}

LandscapeSummary aggregate_census(std::span<const LandscapeCensus> censuses) {
  if (censuses.empty()) throw ValidationError("aggregate_census needs at least one census");
  const LandscapeCensus& first = censuses.front();
  std::vector<double> unique;
  std::vector<double> rate;
  std::vector<double> depth;
  for (const LandscapeCensus& c : censuses) {
    if (c.n != first.n || c.d != first.d || c.move != first.move ||
        c.descents != first.descents) {
      throw ValidationError("aggregate_census: heterogeneous batch (n, d, move, descents differ)");
    }
    unique.push_back(static_cast<double>(c.unique_optima));
    rate.push_back(static_cast<double>(c.blo_visits) / static_cast<double>(c.descents));
    depth.push_back(c.mean_depth);
  }
  const CostSummary su = summarize(unique);
  const CostSummary sr = summarize(rate);
  const CostSummary sd = summarize(depth);
  return LandscapeSummary{first.n,    first.d,    first.move, first.descents,
                          censuses.size(), su.mean, sr.mean,    sd.mean,
                          su.sd,      sr.sd,      sd.sd,      su.sd_defined};
}

}  // namespace tspscale
