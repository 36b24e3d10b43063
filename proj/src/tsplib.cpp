#include "tspscale/tsplib.hpp"

#include <sstream>

#include "tspscale/datasets.hpp"
#include "tspscale/error.hpp"
#include "tspscale/format.hpp"

namespace tspscale {

std::string to_tsplib(const TspInstance& instance, const std::string& name) {
  if (instance.d() != 2) {
    throw ValidationError("TSPLIB EUC_2D export needs d = 2, instance has d = " +
                          std::to_string(instance.d()));
  }
  std::string out;
  out += "NAME : " + name + "\n";
  out += "COMMENT : uniform unit-square instance " + std::to_string(instance.instance_id()) + "\n";
  out += "TYPE : TSP\n";
  out += "DIMENSION : " + std::to_string(instance.n()) + "\n";
  out += "EDGE_WEIGHT_TYPE : EUC_2D\n";
  out += "NODE_COORD_SECTION\n";
  for (int i = 0; i < instance.n(); ++i) {
    const auto p = instance.point(static_cast<NodeIndex>(i));
    out += std::to_string(i + 1) + " " + format_double(p[0]) + " " + format_double(p[1]) + "\n";
  }
  out += "EOF\n";
  return out;
}

TsplibProblem parse_tsplib(const std::string& text) {
  TsplibProblem out;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool in_coords = false;
  std::string weight_type;
  auto fail = [&](const std::string& why) {
    throw ValidationError("TSPLIB line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    line = line.substr(first);
    if (line == "EOF") break;
    if (in_coords) {
      std::istringstream row(line);
      int id = 0;
      double x = 0.0;
      double y = 0.0;
      if (!(row >> id >> x >> y)) fail("expected '<id> <x> <y>'");
      if (id != static_cast<int>(out.coords.size() / 2) + 1) fail("node ids must be 1..n in order");
      out.coords.push_back(x);
      out.coords.push_back(y);
      continue;
    }
    if (line.rfind("NODE_COORD_SECTION", 0) == 0) {
      in_coords = true;
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t");
      const auto b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, colon));
    const std::string value = trim(line.substr(colon + 1));
    if (key == "NAME") out.name = value;
    if (key == "DIMENSION") out.dimension = std::stoi(value);
    if (key == "EDGE_WEIGHT_TYPE") weight_type = value;
  }
  if (weight_type != "EUC_2D") throw ValidationError("TSPLIB: only EUC_2D is supported");
  if (static_cast<int>(out.coords.size()) != 2 * out.dimension) {
    throw ValidationError("TSPLIB: DIMENSION does not match the coordinate count");
  }
  return out;
}

std::vector<std::filesystem::path> export_tsplib(const std::vector<TspInstance>& instances,
                                                 const std::filesystem::path& out_dir) {
  for (const TspInstance& inst : instances) {
    if (inst.d() != 2) {
      throw ValidationError("TSPLIB EUC_2D export needs d = 2, dataset has d = " +
                            std::to_string(inst.d()));
    }
  }
  std::vector<std::filesystem::path> written;
  std::filesystem::create_directories(out_dir);
  for (const TspInstance& inst : instances) {
    const std::string name = "instance_" + std::to_string(inst.instance_id());
    const auto path = out_dir / (name + ".tsp");
    write_file_atomic(path, to_tsplib(inst, name));
    written.push_back(path);
  }
  return written;
}

}  // namespace tspscale
