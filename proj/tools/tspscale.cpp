// tspscale command-line front end.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "tspscale/datasets.hpp"
#include "tspscale/error.hpp"
#include "tspscale/exact.hpp"
#include "tspscale/fit.hpp"
#include "tspscale/format.hpp"
#include "tspscale/landscape.hpp"
#include "tspscale/parallel.hpp"
#include "tspscale/plot.hpp"
#include "tspscale/report.hpp"
#include "tspscale/stats.hpp"
#include "tspscale/surrogate.hpp"
#include "tspscale/sweep.hpp"
#include "tspscale/tsplib.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace tspscale;

namespace {

enum Exit { kOk = 0, kOther = 1, kValidation = 2, kCapacity = 3, kNumeric = 4 };

struct Common {
  std::uint64_t seed = 0;
  std::string out;
  unsigned threads = 1;
  std::string format = "json";
};

void add_common(CLI::App* cmd, Common& c, bool out_required = true) {
  cmd->add_option("--seed", c.seed, "master seed");
  auto* out = cmd->add_option("--out", c.out, "output path");
  if (out_required) out->required();
  cmd->add_option("--threads", c.threads, "worker threads (speed only)")
      ->check(CLI::Range(1u, 1024u));
  cmd->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty() || c.out == "-") {
    std::cout << text;
  } else {
    const fs::path p(c.out);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    write_file_atomic(p, text);
  }
}

// "5,10,15" or "5:50:5".
std::vector<int> parse_values(const std::string& text) {
  std::vector<int> out;
  try {
    if (text.find(':') != std::string::npos) {
      const auto a = text.find(':');
      const auto b = text.find(':', a + 1);
      const int lo = std::stoi(text.substr(0, a));
      const int hi = std::stoi(text.substr(a + 1, b == std::string::npos ? b : b - a - 1));
      const int step = b == std::string::npos ? 1 : std::stoi(text.substr(b + 1));
      if (step < 1) throw ValidationError("range step must be >= 1");
      for (int v = lo; v <= hi; v += step) out.push_back(v);
    } else {
      std::size_t start = 0;
      while (start <= text.size()) {
        const auto comma = text.find(',', start);
        out.push_back(std::stoi(text.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const ValidationError*>(&e)) throw;
    throw ValidationError("cannot parse values '" + text + "'");
  }
  return out;
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string s;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) s += ",";
    s += cells[i];
  }
  return s + "\n";
}

std::string json_to_csv_row(const json& flat, bool header) {
  std::vector<std::string> cells;
  for (const auto& [key, value] : flat.items()) {
    if (header) {
      cells.push_back(key);
    } else if (value.is_number_float()) {
      cells.push_back(format_double(value.get<double>()));
    } else if (value.is_string()) {
      cells.push_back(value.get<std::string>());
    } else {
      cells.push_back(value.dump());
    }
  }
  return csv_line(cells);
}

std::string as_format(const Common& c, const json& doc, const json& flat) {
  if (c.format == "csv") return json_to_csv_row(flat, true) + json_to_csv_row(flat, false);
  return doc.dump(2) + "\n";
}

// ---- gen -------------------------------------------------------------------

struct GenArgs {
  Common c;
  int n = 10;
  int d = 2;
  std::uint64_t count = 1000;
};

int run_gen(const GenArgs& a) {
  const auto instances = generate_instances(a.c.seed, a.n, a.d, a.count, a.c.threads);
  write_instance_dataset(a.c.out, a.c.seed, instances);
  std::cout << "wrote " << instances.size() << " instances to " << a.c.out << "\n";
  return kOk;
}

// ---- solve -----------------------------------------------------------------

struct SolveArgs {
  Common c;
  std::string instances;
  std::optional<int> max_nodes;
  std::string import_file;
  std::optional<int> k;
  std::string move = "two_opt";
};

int run_solve_exact(const SolveArgs& a) {
  if (!a.import_file.empty()) {
    const InstanceDataset data = read_instance_dataset(a.instances);
    SolutionManifest m;
    m.method = SolutionMethod::external_import;
    m.master_seed = data.manifest.master_seed;
    m.n = data.manifest.n;
    m.d = data.manifest.d;
    m.count = data.manifest.count;
    const auto solutions = import_solutions(a.import_file, data.instances);
    write_solution_dataset(a.c.out, m, solutions);
    std::cout << "imported " << solutions.size() << " solutions to " << a.c.out << "\n";
    return kOk;
  }
  SolveMethod method = SolveMethod::exact();
  if (a.max_nodes) method.exact_max_nodes = *a.max_nodes;
  const SolutionDataset ds = build_solution_dataset(a.instances, method, a.c.out, a.c.threads);
  std::cout << "solved " << ds.solutions.size() << " instances exactly, wrote " << a.c.out
            << "\n";
  return kOk;
}

int run_solve_surrogate(const SolveArgs& a) {
  const InstanceDataset data = read_instance_dataset(a.instances);
  SurrogateConfig cfg{a.k.value_or(default_surrogate_descents(data.manifest.n)),
                      move_kind_from_string(a.move)};
  const SolutionDataset ds =
      build_solution_dataset(a.instances, SolveMethod::best_of(cfg), a.c.out, a.c.threads);
  std::cout << "solved " << ds.solutions.size() << " instances with best-of-"
            << cfg.descents_per_instance << ", wrote " << a.c.out << "\n";
  return kOk;
}

// ---- descend ---------------------------------------------------------------

struct DescendArgs {
  Common c;
  std::string instances;
  std::string move = "two_opt";
  std::optional<int> max_depth;
};

int run_descend(const DescendArgs& a) {
  const InstanceDataset data = read_instance_dataset(a.instances);
  const MoveKind move = move_kind_from_string(a.move);
  if (a.max_depth && *a.max_depth < 0) throw ValidationError("--max-depth must be >= 0");
  const RandomStream starts(a.c.seed, "descend-starts/n=" + std::to_string(data.manifest.n) +
                                          "/d=" + std::to_string(data.manifest.d));
  std::vector<std::optional<DescentResult>> results(data.instances.size());
  parallel_for(data.instances.size(), a.c.threads, [&](std::size_t i) {
    RandomStream s = starts.at(data.instances[i].instance_id());
    results[i] = descend(data.instances[i], random_tour(s, data.manifest.n), move, a.max_depth);
  });

  json manifest;
  manifest["version"] = kDatasetVersion;
  manifest["kind"] = "descents";
  manifest["master_seed"] = a.c.seed;
  manifest["instances"] = fs::absolute(a.instances).lexically_normal().string();
  manifest["instances_master_seed"] = data.manifest.master_seed;
  manifest["n"] = data.manifest.n;
  manifest["d"] = data.manifest.d;
  manifest["count"] = data.manifest.count;
  manifest["move"] = std::string(to_string(move));
  manifest["max_depth"] = a.max_depth ? json(*a.max_depth) : json(nullptr);
  manifest["format"] = a.c.format;

  std::string body;
  if (a.c.format == "csv") {
    body = "instance_id,start_cost,final_cost,moves_made,hit_depth_limit\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
      const DescentResult& r = *results[i];
      body += csv_line({std::to_string(i), format_double(r.start_cost), format_double(r.final_cost),
                        std::to_string(r.moves_made), r.hit_depth_limit ? "1" : "0"});
    }
  } else {
    json rows = json::array();
    for (std::size_t i = 0; i < results.size(); ++i) {
      const DescentResult& r = *results[i];
      rows.push_back({{"instance_id", i},
                      {"start_cost", r.start_cost},
                      {"final_cost", r.final_cost},
                      {"moves_made", r.moves_made},
                      {"hit_depth_limit", r.hit_depth_limit},
                      {"final_tour", std::vector<NodeIndex>(r.final_tour.perm().begin(),
                                                            r.final_tour.perm().end())}});
    }
    body = rows.dump(1) + "\n";
  }
  AtomicDirectory out(a.c.out);
  write_file_atomic(out.staging() / ("descents." + a.c.format), body);
  write_file_atomic(out.staging() / "manifest.json", manifest.dump(2) + "\n");
  out.commit();
  std::cout << "ran " << results.size() << " descents, wrote " << a.c.out << "\n";
  return kOk;
}

// Per-instance costs from a solution dataset or a descend output directory.
std::vector<double> load_costs(const fs::path& dir, std::string& tag) {
  const json m = json::parse(read_file(dir / "manifest.json"), nullptr, false);
  if (m.is_discarded()) throw ValidationError((dir / "manifest.json").string() + ": malformed");
  std::vector<double> costs;
  if (m.value("kind", "") == "descents") {
    tag = "descent:" + m.value("move", "") +
          (m["max_depth"].is_null() ? "" : ":M=" + std::to_string(m["max_depth"].get<int>()));
    if (m.value("format", "json") == "csv") {
      // instance_id,start_cost,final_cost,...
      const std::string text = read_file(dir / "descents.csv");
      std::size_t pos = text.find('\n');
      while (pos != std::string::npos && pos + 1 < text.size()) {
        const auto end = text.find('\n', pos + 1);
        const std::string line = text.substr(pos + 1, end - pos - 1);
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        const auto c3 = line.find(',', c2 + 1);
        if (c3 == std::string::npos) throw ValidationError("malformed descents.csv row: " + line);
        costs.push_back(std::stod(line.substr(c2 + 1, c3 - c2 - 1)));
        pos = end;
      }
    } else {
      for (const auto& row : json::parse(read_file(dir / "descents.json"))) {
        costs.push_back(row.at("final_cost").get<double>());
      }
    }
    return costs;
  }
  const SolutionDataset ds = read_solution_dataset(dir);
  tag = std::string(to_string(ds.manifest.method));
  if (ds.manifest.descents_per_instance) {
    tag += ":" + std::to_string(*ds.manifest.descents_per_instance);
  }
  for (const auto& s : ds.solutions) costs.push_back(s.cost);
  return costs;
}

// ---- census ----------------------------------------------------------------

struct CensusArgs {
  Common c;
  std::string instances;
  std::string move = "two_opt";
  std::uint64_t descents = 1000;
};

int run_census(const CensusArgs& a) {
  const InstanceDataset data = read_instance_dataset(a.instances);
  const MoveKind move = move_kind_from_string(a.move);
  const RandomStream root(a.c.seed, "census/n=" + std::to_string(data.manifest.n) +
                                        "/d=" + std::to_string(data.manifest.d));
  std::vector<LandscapeCensus> all;
  all.reserve(data.instances.size());
  for (const TspInstance& inst : data.instances) {
    all.push_back(census(inst, move, a.descents, root.at(inst.instance_id()), a.c.threads));
  }
  const LandscapeSummary s = aggregate_census(all);
  json doc = to_json(s);
  doc["master_seed"] = a.c.seed;
  json flat = doc;
  json per = json::array();
  for (const auto& c : all) {
    per.push_back({{"instance_id", c.instance_id},
                   {"unique_optima", c.unique_optima},
                   {"blo_cost", c.blo_cost},
                   {"blo_visits", c.blo_visits},
                   {"mean_depth", c.mean_depth}});
  }
  doc["per_instance"] = per;
  emit(a.c, as_format(a.c, doc, flat));
  return kOk;
}

// ---- subopt ----------------------------------------------------------------

struct SuboptArgs {
  Common c;
  std::string model;
  std::string opt;
};

int run_subopt(const SuboptArgs& a) {
  std::string model_tag, opt_tag;
  const auto model = load_costs(a.model, model_tag);
  const auto opt = load_costs(a.opt, opt_tag);
  const SuboptimalitySummary s = suboptimality_paired(model, opt);
  const json mm = json::parse(read_file(fs::path(a.opt) / "manifest.json"));
  json doc;
  doc["n"] = mm.at("n");
  doc["d"] = mm.at("d");
  const json summary = to_json(s);
  for (const auto& [k, v] : summary.items()) doc[k] = v;
  doc["method_tags"] = {{"model", model_tag}, {"opt", opt_tag}};
  json flat{{"n", doc["n"]},           {"d", doc["d"]},
            {"count", s.count_model},  {"mu_model", s.mu_model},
            {"mu_opt", s.mu_opt},      {"s", s.s},
            {"sd_model", s.sd_model},  {"sd_opt", s.sd_opt},
            {"model", model_tag},      {"opt", opt_tag}};
  emit(a.c, as_format(a.c, doc, flat));
  return kOk;
}

// ---- fit -------------------------------------------------------------------

struct FitArgs {
  Common c;
  std::string points;
  std::string form;
  std::string space;
  int starts = 64;
  double tol = 1e-10;
  int max_iterations = 2000;
};

int run_fit(const FitArgs& a) {
  const auto points = read_points_csv(a.points);
  FitOptions options;
  if (!a.space.empty()) options.fit_space = fit_space_from_string(a.space);
  options.multistart_count = a.starts;
  options.tol = a.tol;
  options.max_iterations = a.max_iterations;
  options.threads = a.c.threads;
  const FitResult r = fit_scaling_law(fit_form_from_string(a.form), points, options);
  json doc = to_json(r, options);
  json flat{{"form", doc["form"]}};
  for (const auto& [k, v] : doc["params"].items()) flat[k] = v;
  flat["fit_space"] = doc["fit_space"];
  flat["sse"] = r.sse;
  flat["r2"] = r.r2;
  flat["n_points"] = r.n_points;
  flat["converged"] = r.converged;
  emit(a.c, as_format(a.c, doc, flat));
  if (!r.converged) {
    std::cerr << "warning: fit did not converge; best-so-far result written\n";
    return kNumeric;
  }
  return kOk;
}

// ---- ttest -----------------------------------------------------------------

struct TtestArgs {
  Common c;
  std::string a_dir, b_dir;
  std::vector<double> a_stats, b_stats;  // count mean sd
};

CostSummary summary_arg(const std::vector<double>& v, const char* name) {
  if (v.size() != 3) throw ValidationError(std::string(name) + " takes COUNT MEAN SD");
  if (!(v[0] >= 1.0) || v[0] != std::floor(v[0])) {
    throw ValidationError(std::string(name) + ": count must be a positive integer");
  }
  return CostSummary::from_moments(static_cast<std::uint64_t>(v[0]), v[1], v[2]);
}

int run_ttest(const TtestArgs& a) {
  CostSummary sa{}, sb{};
  std::string unused;
  if (!a.a_dir.empty()) {
    sa = summarize(load_costs(a.a_dir, unused));
  } else {
    sa = summary_arg(a.a_stats, "--a-stats");
  }
  if (!a.b_dir.empty()) {
    sb = summarize(load_costs(a.b_dir, unused));
  } else {
    sb = summary_arg(a.b_stats, "--b-stats");
  }
  const WelchTTest t = validate_surrogate(sa, sb);
  json doc;
  doc["a"] = to_json(sa);
  doc["b"] = to_json(sb);
  const json test = to_json(t);
  for (const auto& [k, v] : test.items()) doc[k] = v;
  emit(a.c, as_format(a.c, doc, test));
  return kOk;
}

// ---- sweep -----------------------------------------------------------------

struct SweepArgs {
  Common c;
  std::string axis = "nodes";
  std::string values;
  int fixed_n = 10;
  int fixed_d = 2;
  std::uint64_t instances = 1000;
  std::string move = "two_opt";
  std::optional<int> max_depth;
  std::string opt_method = "exact_auto";
  int exact_max_nodes = 12;
};

int run_sweep_cmd(const SweepArgs& a) {
  SweepConfig cfg;
  cfg.axis = a.axis == "nodes" ? SweepAxis::nodes : SweepAxis::dims;
  cfg.values = parse_values(a.values);
  cfg.fixed_n = a.fixed_n;
  cfg.fixed_d = a.fixed_d;
  cfg.instances_per_point = a.instances;
  cfg.move = move_kind_from_string(a.move);
  cfg.max_depth = a.max_depth;
  cfg.opt_method = OptMethod::parse(a.opt_method);
  cfg.opt_method.exact_max_nodes = a.exact_max_nodes;
  cfg.master_seed = a.c.seed;
  const auto points = run_sweep(cfg, fs::path(a.c.out), a.c.threads);
  int refused = 0;
  for (const SweepPoint& p : points) {
    if (p.ok) {
      std::cout << p.scale << ": s=" << format_double(p.s)
                << " early_stop=" << format_double(p.early_stop_fraction) << "\n";
    } else {
      ++refused;
      std::cout << p.scale << ": refused (" << p.error << ")\n";
    }
  }
  return refused > 0 ? kCapacity : kOk;
}

// ---- export / plot ---------------------------------------------------------

struct ExportArgs {
  Common c;
  std::string instances;
};

int run_export(const ExportArgs& a) {
  const InstanceDataset data = read_instance_dataset(a.instances);
  const auto files = export_tsplib(data.instances, a.c.out);
  std::cout << "wrote " << files.size() << " TSPLIB files to " << a.c.out << "\n";
  return kOk;
}

struct PlotArgs {
  Common c;
  std::string points;
  std::string fit;
  PlotOptions options;
};

int run_plot(const PlotArgs& a) {
  const auto points = read_points_csv(a.points);
  std::optional<FitResult> fit;
  if (!a.fit.empty()) fit = fit_result_from_json(json::parse(read_file(a.fit)));
  const std::string svg = render_svg(points, fit, a.options);
  emit(a.c, svg);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Euclidean TSP scaling experiments: datasets, exact and surrogate optima, local "
               "search, landscapes and scaling-law fits"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a seeded instance dataset");
  add_common(gen_cmd, gen.c);
  gen_cmd->add_option("--n", gen.n, "nodes per instance")->required();
  gen_cmd->add_option("--d", gen.d, "dimensions");
  gen_cmd->add_option("--count", gen.count, "number of instances");

  SolveArgs exact;
  auto* exact_cmd = app.add_subcommand("solve-exact", "exact optima (Held-Karp) or import");
  add_common(exact_cmd, exact.c);
  exact_cmd->add_option("--instances", exact.instances, "instance dataset directory")->required();
  exact_cmd->add_option("--max-nodes", exact.max_nodes, "raise the Held-Karp node limit");
  exact_cmd->add_option("--import", exact.import_file,
                        "import an external solutions.bin instead of solving");

  SolveArgs sur;
  auto* sur_cmd = app.add_subcommand("solve-surrogate", "best-of-k descent surrogate optima");
  add_common(sur_cmd, sur.c);
  sur_cmd->add_option("--instances", sur.instances, "instance dataset directory")->required();
  sur_cmd->add_option("--k", sur.k, "descents per instance (default 100 for n<=10, else 1000)");
  sur_cmd->add_option("--move", sur.move, "two_opt or two_exchange");

  DescendArgs desc;
  auto* desc_cmd = app.add_subcommand("descend", "one descent per instance from a random start");
  add_common(desc_cmd, desc.c);
  desc_cmd->add_option("--instances", desc.instances, "instance dataset directory")->required();
  desc_cmd->add_option("--move", desc.move, "two_opt or two_exchange");
  desc_cmd->add_option("--max-depth", desc.max_depth, "move limit M");

  CensusArgs cen;
  auto* cen_cmd = app.add_subcommand("census", "local-optima census per instance");
  add_common(cen_cmd, cen.c, false);
  cen_cmd->add_option("--instances", cen.instances, "instance dataset directory")->required();
  cen_cmd->add_option("--move", cen.move, "two_opt or two_exchange");
  cen_cmd->add_option("--descents", cen.descents, "descents per instance");

  SuboptArgs sub;
  auto* sub_cmd = app.add_subcommand("subopt", "paired suboptimality of model vs optimal costs");
  add_common(sub_cmd, sub.c, false);
  sub_cmd->add_option("--model", sub.model, "descend output or solution dataset")->required();
  sub_cmd->add_option("--opt", sub.opt, "solution dataset")->required();

  FitArgs fit;
  auto* fit_cmd = app.add_subcommand("fit", "fit a scaling-law form to x,y points");
  add_common(fit_cmd, fit.c, false);
  fit_cmd->add_option("--points", fit.points, "CSV with header, columns x,y")->required();
  fit_cmd->add_option("--form", fit.form, "power_decay, offset_power_growth, subexp_decay, exp_decay")
      ->required();
  fit_cmd->add_option("--space", fit.space, "linear or log");
  fit_cmd->add_option("--starts", fit.starts, "multistart count");
  fit_cmd->add_option("--tol", fit.tol, "relative tolerance");
  fit_cmd->add_option("--max-iterations", fit.max_iterations, "iteration cap per start");

  TtestArgs tt;
  auto* tt_cmd = app.add_subcommand("ttest", "Welch t-test between two cost samples");
  add_common(tt_cmd, tt.c, false);
  tt_cmd->add_option("--a", tt.a_dir, "solution dataset or descend output");
  tt_cmd->add_option("--b", tt.b_dir, "solution dataset or descend output");
  tt_cmd->add_option("--a-stats", tt.a_stats, "COUNT MEAN SD")->expected(3);
  tt_cmd->add_option("--b-stats", tt.b_stats, "COUNT MEAN SD")->expected(3);

  SweepArgs sw;
  auto* sw_cmd = app.add_subcommand("sweep", "suboptimality sweep over n or d");
  add_common(sw_cmd, sw.c);
  sw_cmd->add_option("--axis", sw.axis, "nodes or dims")->check(CLI::IsMember({"nodes", "dims"}));
  sw_cmd->add_option("--values", sw.values, "list (5,10,15) or range (5:50:5)")->required();
  sw_cmd->add_option("--fixed-n", sw.fixed_n, "node count for a dims sweep");
  sw_cmd->add_option("--fixed-d", sw.fixed_d, "dimensions for a nodes sweep");
  sw_cmd->add_option("--instances", sw.instances, "instances per point");
  sw_cmd->add_option("--move", sw.move, "two_opt or two_exchange");
  sw_cmd->add_option("--max-depth", sw.max_depth, "move limit M");
  sw_cmd->add_option("--opt-method", sw.opt_method, "exact_auto, surrogate:K or hybrid:K");
  sw_cmd->add_option("--exact-max-nodes", sw.exact_max_nodes,
                     "largest n solved exactly by hybrid:K");

  ExportArgs ex;
  auto* ex_cmd = app.add_subcommand("export-tsplib", "write EUC_2D TSPLIB files");
  add_common(ex_cmd, ex.c);
  ex_cmd->add_option("--instances", ex.instances, "instance dataset directory")->required();

  PlotArgs pl;
  auto* pl_cmd = app.add_subcommand("plot", "SVG scatter with optional fitted curve");
  add_common(pl_cmd, pl.c);
  pl_cmd->add_option("--points", pl.points, "CSV with header, columns x,y")->required();
  pl_cmd->add_option("--fit", pl.fit, "fit.json to overlay");
  pl_cmd->add_option("--title", pl.options.title);
  pl_cmd->add_option("--x-label", pl.options.x_label);
  pl_cmd->add_option("--y-label", pl.options.y_label);
  pl_cmd->add_flag("--log-x", pl.options.log_x);
  pl_cmd->add_flag("--log-y", pl.options.log_y);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*exact_cmd) return run_solve_exact(exact);
    if (*sur_cmd) return run_solve_surrogate(sur);
    if (*desc_cmd) return run_descend(desc);
    if (*cen_cmd) return run_census(cen);
    if (*sub_cmd) return run_subopt(sub);
    if (*fit_cmd) return run_fit(fit);
    if (*tt_cmd) return run_ttest(tt);
    if (*sw_cmd) return run_sweep_cmd(sw);
    if (*ex_cmd) return run_export(ex);
    if (*pl_cmd) return run_plot(pl);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const CapacityError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kCapacity;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOther;
  }
  return kOther;
}
