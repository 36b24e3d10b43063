#include "tspscale/sweep.hpp"

#include <string>

#include "tspscale/datasets.hpp"
#include "tspscale/error.hpp"
#include "tspscale/format.hpp"
#include "tspscale/instance.hpp"
#include "tspscale/parallel.hpp"
#include "tspscale/stats.hpp"
#include "tspscale/surrogate.hpp"

namespace tspscale {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

OptMethod OptMethod::parse(const std::string& text) {
  OptMethod m;
  if (text == "exact_auto") return m;
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  if (kind != "surrogate" && kind != "hybrid") {
    throw ValidationError("opt method must be exact_auto, surrogate:K or hybrid:K, got '" + text +
                          "'");
  }
  m.kind = kind == "surrogate" ? Kind::surrogate : Kind::hybrid;
  if (colon == std::string::npos) {
    throw ValidationError("opt method '" + text + "' needs a descent count, e.g. " + kind + ":100");
  }
  try {
    std::size_t used = 0;
    m.descents = std::stoi(text.substr(colon + 1), &used);
    if (used != text.size() - colon - 1) throw std::invalid_argument("junk");
  } catch (const std::exception&) {
    throw ValidationError("bad descent count in opt method '" + text + "'");
  }
  if (m.descents < 1) throw ValidationError("opt method descent count must be >= 1");
  return m;
}

std::string OptMethod::str() const {
  switch (kind) {
    case Kind::exact_auto: return "exact_auto";
    case Kind::surrogate: return "surrogate:" + std::to_string(descents);
    case Kind::hybrid: return "hybrid:" + std::to_string(descents);
  }
  return "exact_auto";
}

void SweepConfig::validate() const {
  if (values.empty()) throw ValidationError("sweep needs at least one value");
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] <= values[i - 1]) throw ValidationError("sweep values must be strictly increasing");
  }
  if (instances_per_point < 1) throw ValidationError("instances_per_point must be >= 1");
  if (max_depth && *max_depth < 0) throw ValidationError("max_depth must be >= 0");
  if (axis == SweepAxis::nodes) {
    if (values.front() < 3) throw ValidationError("node sweep values must be >= 3");
    if (fixed_d < 1) throw ValidationError("fixed_d must be >= 1");
  } else {
    if (values.front() < 1) throw ValidationError("dimension sweep values must be >= 1");
    if (fixed_n < 3) throw ValidationError("fixed_n must be >= 3");
  }
  if (opt_method.descents < 1) throw ValidationError("opt method descent count must be >= 1");
}

json SweepConfig::to_json() const {
  json j;
  j["axis"] = axis == SweepAxis::nodes ? "nodes" : "dims";
  j["values"] = values;
  if (axis == SweepAxis::nodes) {
    j["fixed_d"] = fixed_d;
  } else {
    j["fixed_n"] = fixed_n;
  }
  j["instances_per_point"] = instances_per_point;
  j["move"] = std::string(to_string(move));
  j["max_depth"] = max_depth ? json(*max_depth) : json(nullptr);
  j["opt_method"] = opt_method.str();
  j["exact_max_nodes"] = opt_method.exact_max_nodes;
  j["master_seed"] = master_seed;
  return j;
}

SweepConfig SweepConfig::from_json(const json& j) {
  try {
    SweepConfig c;
    const std::string axis = j.at("axis").get<std::string>();
    if (axis != "nodes" && axis != "dims") throw ValidationError("axis must be nodes or dims");
    c.axis = axis == "nodes" ? SweepAxis::nodes : SweepAxis::dims;
    c.values = j.at("values").get<std::vector<int>>();
    if (j.contains("fixed_d")) c.fixed_d = j["fixed_d"].get<int>();
    if (j.contains("fixed_n")) c.fixed_n = j["fixed_n"].get<int>();
    c.instances_per_point = j.at("instances_per_point").get<std::uint64_t>();
    c.move = move_kind_from_string(j.at("move").get<std::string>());
    if (j.contains("max_depth") && !j["max_depth"].is_null()) c.max_depth = j["max_depth"].get<int>();
    c.opt_method = OptMethod::parse(j.at("opt_method").get<std::string>());
    if (j.contains("exact_max_nodes")) c.opt_method.exact_max_nodes = j["exact_max_nodes"].get<int>();
    c.master_seed = j.at("master_seed").get<std::uint64_t>();
    c.validate();
    return c;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("bad sweep config: ") + e.what());
  }
}

json SweepPoint::to_json() const {
  json j;
  j["scale"] = scale;
  j["n"] = n;
  j["d"] = d;
  j["status"] = ok ? "ok" : "refused";
  if (!ok) {
    j["error"] = error;
    return j;
  }
  j["opt_method"] = opt_method;
  j["counts"] = instances;
  j["mu_model"] = mu_model;
  j["mu_opt"] = mu_opt;
  j["s"] = s;
  j["sd_model"] = sd_model;
  j["sd_opt"] = sd_opt;
  j["sd_gap"] = sd_gap;
  j["min_gap"] = min_gap;
  j["early_stop_fraction"] = early_stop_fraction;
  j["mean_moves"] = mean_moves;
  return j;
}

SweepPoint SweepPoint::from_json(const json& j) {
  SweepPoint p;
  p.scale = j.at("scale").get<int>();
  p.n = j.at("n").get<int>();
  p.d = j.at("d").get<int>();
  p.ok = j.at("status").get<std::string>() == "ok";
  if (!p.ok) {
    p.error = j.value("error", "");
    return p;
  }
  p.opt_method = j.at("opt_method").get<std::string>();
  p.instances = j.at("counts").get<std::uint64_t>();
  p.mu_model = j.at("mu_model").get<double>();
  p.mu_opt = j.at("mu_opt").get<double>();
  p.s = j.at("s").get<double>();
  p.sd_model = j.at("sd_model").get<double>();
  p.sd_opt = j.at("sd_opt").get<double>();
  p.sd_gap = j.at("sd_gap").get<double>();
  p.min_gap = j.at("min_gap").get<double>();
  p.early_stop_fraction = j.at("early_stop_fraction").get<double>();
  p.mean_moves = j.at("mean_moves").get<double>();
  return p;
}

SweepPoint run_sweep_point(const SweepConfig& config, int value, unsigned threads) {
  config.validate();
  SweepPoint point;
  point.scale = value;
  point.n = config.axis == SweepAxis::nodes ? value : config.fixed_n;
  point.d = config.axis == SweepAxis::dims ? value : config.fixed_d;
  const int n = point.n;
  const int d = point.d;

  SolveMethod method;
  const OptMethod& om = config.opt_method;
  const bool exact = om.kind == OptMethod::Kind::exact_auto ||
                     (om.kind == OptMethod::Kind::hybrid && n <= om.exact_max_nodes);
  if (exact) {
    method = SolveMethod::exact();
    if (om.kind == OptMethod::Kind::hybrid) method.exact_max_nodes = om.exact_max_nodes;
    point.opt_method = "held_karp";
  } else {
    method = SolveMethod::best_of(SurrogateConfig{om.descents, MoveKind::two_opt});
    point.opt_method = "surrogate:" + std::to_string(om.descents);
  }

  const std::vector<TspInstance> instances =
      generate_instances(config.master_seed, n, d, config.instances_per_point, threads);
  std::vector<OptimalSolution> optima;
  try {
    optima = solve_instances(instances, method, config.master_seed, threads);
  } catch (const CapacityError& e) {
    point.ok = false;
    point.error = e.what();
    return point;
  }

  const RandomStream starts(config.master_seed, "sweep-starts/n=" + std::to_string(n) +
                                                    "/d=" + std::to_string(d));
  std::vector<double> model_cost(instances.size());
  std::vector<char> stopped(instances.size());
  std::vector<int> moves(instances.size());
  parallel_for(instances.size(), threads, [&](std::size_t i) {
    RandomStream stream = starts.at(instances[i].instance_id());
    const Tour start = random_tour(stream, n);
    const DescentResult run = descend(instances[i], start, config.move, config.max_depth);
    model_cost[i] = run.final_cost;
    stopped[i] = run.hit_depth_limit ? 1 : 0;
    moves[i] = run.moves_made;
  });

  std::vector<double> opt_cost(optima.size());
  for (std::size_t i = 0; i < optima.size(); ++i) opt_cost[i] = optima[i].cost;
  const SuboptimalitySummary sub = suboptimality_paired(model_cost, opt_cost);
  std::uint64_t stopped_count = 0;
  std::uint64_t total_moves = 0;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    stopped_count += static_cast<std::uint64_t>(stopped[i]);
    total_moves += static_cast<std::uint64_t>(moves[i]);
  }
  const auto count = static_cast<double>(instances.size());
  point.ok = true;
  point.instances = instances.size();
  point.mu_model = sub.mu_model;
  point.mu_opt = sub.mu_opt;
  point.s = sub.s;
  point.sd_model = sub.sd_model;
  point.sd_opt = sub.sd_opt;
  point.sd_gap = sub.gap->sd;
  point.min_gap = sub.gap->min;
  point.early_stop_fraction = static_cast<double>(stopped_count) / count;
  point.mean_moves = static_cast<double>(total_moves) / count;
  return point;
}

std::string sweep_csv(const std::vector<SweepPoint>& points) {
  std::string out = "scale,s,sd,early_stop_fraction,mu_model,mu_opt,instances\n";
  for (const SweepPoint& p : points) {
    if (!p.ok) continue;
    out += std::to_string(p.scale) + "," + format_double(p.s) + "," + format_double(p.sd_gap) +
           "," + format_double(p.early_stop_fraction) + "," + format_double(p.mu_model) + "," +
           format_double(p.mu_opt) + "," + std::to_string(p.instances) + "\n";
  }
  return out;
}

std::vector<SweepPoint> run_sweep(const SweepConfig& config,
                                  const std::optional<fs::path>& out_dir, unsigned threads) {
  config.validate();
  const std::string config_text = config.to_json().dump();
  if (out_dir) {
    const fs::path manifest = *out_dir / "manifest.json";
    if (fs::exists(manifest)) {
      const json previous = json::parse(read_file(manifest), nullptr, false);
      if (previous.is_discarded() || previous.value("config", json()).dump() != config_text) {
        // A different config invalidates every stored point.
        fs::remove_all(*out_dir / "points");
      }
    }
    json m;
    m["version"] = kDatasetVersion;
    m["kind"] = "sweep";
    m["master_seed"] = config.master_seed;
    m["config"] = config.to_json();
    write_file_atomic(manifest, m.dump(2) + "\n");
  }

  std::vector<SweepPoint> points;
  for (const int value : config.values) {
    std::optional<fs::path> marker;
    if (out_dir) marker = *out_dir / "points" / (std::to_string(value) + ".json");
    if (marker && fs::exists(*marker)) {
      const json stored = json::parse(read_file(*marker), nullptr, false);
      if (!stored.is_discarded()) {
        points.push_back(SweepPoint::from_json(stored));
        continue;
      }
    }
    SweepPoint point = run_sweep_point(config, value, threads);
    if (marker) write_file_atomic(*marker, point.to_json().dump(2) + "\n");
    points.push_back(std::move(point));
  }
  if (out_dir) write_file_atomic(*out_dir / "sweep.csv", sweep_csv(points));
  return points;
}

}  // namespace tspscale
