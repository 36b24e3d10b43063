#include "tspscale/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "tspscale/datasets.hpp"
#include "tspscale/error.hpp"

namespace tspscale {

std::vector<FitPoint> parse_points_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  std::vector<FitPoint> points;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw ValidationError("CSV line " + std::to_string(line_no) + ": expected 'x,y'");
    }
    const auto next = line.find(',', comma + 1);
    const std::string xs = line.substr(0, comma);
    const std::string ys = line.substr(comma + 1, next == std::string::npos ? std::string::npos
                                                                          : next - comma - 1);
    try {
      std::size_t used_x = 0;
      std::size_t used_y = 0;
      const double x = std::stod(xs, &used_x);
      const double y = std::stod(ys, &used_y);
      if (xs.find_first_not_of(" \t", used_x) != std::string::npos ||
          ys.find_first_not_of(" \t", used_y) != std::string::npos) {
        throw std::invalid_argument("trailing characters");
      }
      points.push_back({x, y});
    } catch (const std::exception&) {
      throw ValidationError("CSV line " + std::to_string(line_no) + ": cannot parse numbers in '" +
                            line + "'");
    }
  }
  if (points.empty()) throw ValidationError("CSV contains no data rows");
  return points;
}

std::vector<FitPoint> read_points_csv(const std::filesystem::path& path) {
  return parse_points_csv(read_file(path));
}

namespace {

std::string escape_xml(const std::string& s) {
  std::string out;
  for (const char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

struct Axis {
  bool log = false;
  double lo = 0.0;
  double hi = 1.0;
  double pixel_lo = 0.0;
  double pixel_hi = 1.0;

  [[nodiscard]] double t(double v) const { return log ? std::log10(v) : v; }
  [[nodiscard]] double map(double v) const {
    return pixel_lo + (t(v) - t(lo)) / (t(hi) - t(lo)) * (pixel_hi - pixel_lo);
  }
  [[nodiscard]] std::vector<double> ticks() const {
    std::vector<double> out;
    if (log) {
      for (double e = std::floor(std::log10(lo)); e <= std::ceil(std::log10(hi)); e += 1.0) {
        const double v = std::pow(10.0, e);
        if (v >= lo * (1 - 1e-12) && v <= hi * (1 + 1e-12)) out.push_back(v);
      }
      if (out.size() < 2) out = {lo, hi};
      return out;
    }
    for (int i = 0; i <= 5; ++i) out.push_back(lo + (hi - lo) * i / 5.0);
    return out;
  }
};

Axis make_axis(std::vector<double> values, bool log, double pixel_lo, double pixel_hi) {
  if (log) {
    values.erase(std::remove_if(values.begin(), values.end(), [](double v) { return !(v > 0.0); }),
                 values.end());
    if (values.empty()) throw ValidationError("log axis needs positive values");
  }
  auto [mn, mx] = std::minmax_element(values.begin(), values.end());
  double lo = *mn;
  double hi = *mx;
  if (lo == hi) {
    if (log) {
      lo /= 2.0;
      hi *= 2.0;
    } else {
      lo -= 0.5;
      hi += 0.5;
    }
  } else if (!log) {
    const double pad = 0.05 * (hi - lo);
    lo -= pad;
    hi += pad;
  } else {
    lo /= 1.1;
    hi *= 1.1;
  }
  return Axis{log, lo, hi, pixel_lo, pixel_hi};
}

}  // namespace

std::string render_svg(const std::vector<FitPoint>& points, const std::optional<FitResult>& fit,
                       const PlotOptions& options) {
  if (points.empty()) throw ValidationError("plot needs at least one point");
  const double left = 70.0;
  const double right = options.width - 20.0;
  const double top = 40.0;
  const double bottom = options.height - 50.0;

  std::vector<double> xs;
  std::vector<double> ys;
  for (const FitPoint& p : points) {
    if (!(options.log_x && p.x <= 0.0) && !(options.log_y && p.y <= 0.0)) {
      xs.push_back(p.x);
      ys.push_back(p.y);
    }
  }
  if (xs.empty()) throw ValidationError("no plottable points on the requested log axes");

  std::vector<FitPoint> curve;
  if (fit) {
    const auto [mn, mx] = std::minmax_element(xs.begin(), xs.end());
    const int samples = std::max(2, options.curve_samples);
    for (int i = 0; i < samples; ++i) {
      const double f = static_cast<double>(i) / (samples - 1);
      const double x = options.log_x ? *mn * std::pow(*mx / *mn, f) : *mn + (*mx - *mn) * f;
      try {
        const double y = eval_form(fit->form, fit->params, x);
        if (std::isfinite(y) && !(options.log_y && y <= 0.0)) curve.push_back({x, y});
      } catch (const ValidationError&) {
        // outside the form's domain (x <= gamma); skip the sample
      }
    }
  }
  std::vector<double> all_y = ys;
  for (const FitPoint& c : curve) all_y.push_back(c.y);
  const Axis ax = make_axis(xs, options.log_x, left, right);
  const Axis ay = make_axis(all_y, options.log_y, bottom, top);

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width << "\" height=\""
      << options.height << "\" viewBox=\"0 0 " << options.width << ' ' << options.height
      << "\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << options.width << "\" height=\"" << options.height
      << "\" fill=\"white\"/>\n";
  if (!options.title.empty()) {
    svg << "<text x=\"" << num(options.width / 2.0)
        << "\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">"
        << escape_xml(options.title) << "</text>\n";
  }
  svg << "<g stroke=\"black\" stroke-width=\"1\">\n";
  svg << "<line x1=\"" << num(left) << "\" y1=\"" << num(bottom) << "\" x2=\"" << num(right)
      << "\" y2=\"" << num(bottom) << "\"/>\n";
  svg << "<line x1=\"" << num(left) << "\" y1=\"" << num(bottom) << "\" x2=\"" << num(left)
      << "\" y2=\"" << num(top) << "\"/>\n";
  svg << "</g>\n<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (const double tx : ax.ticks()) {
    const double px = ax.map(tx);
    svg << "<line x1=\"" << num(px) << "\" y1=\"" << num(bottom) << "\" x2=\"" << num(px)
        << "\" y2=\"" << num(bottom + 5) << "\" stroke=\"black\"/>";
    svg << "<text x=\"" << num(px) << "\" y=\"" << num(bottom + 18)
        << "\" text-anchor=\"middle\">" << tick_label(tx) << "</text>\n";
  }
  for (const double ty : ay.ticks()) {
    const double py = ay.map(ty);
    svg << "<line x1=\"" << num(left - 5) << "\" y1=\"" << num(py) << "\" x2=\"" << num(left)
        << "\" y2=\"" << num(py) << "\" stroke=\"black\"/>";
    svg << "<text x=\"" << num(left - 8) << "\" y=\"" << num(py + 4)
        << "\" text-anchor=\"end\">" << tick_label(ty) << "</text>\n";
  }
  svg << "<text x=\"" << num((left + right) / 2) << "\" y=\"" << num(options.height - 12.0)
      << "\" text-anchor=\"middle\">" << escape_xml(options.x_label) << "</text>\n";
  svg << "<text x=\"16\" y=\"" << num((top + bottom) / 2) << "\" text-anchor=\"middle\" "
      << "transform=\"rotate(-90 16 " << num((top + bottom) / 2) << ")\">"
      << escape_xml(options.y_label) << "</text>\n";
  svg << "</g>\n";
  if (curve.size() >= 2) {
    svg << "<polyline class=\"fit\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\" "
           "stroke-dasharray=\"5,3\" points=\"";
    for (std::size_t i = 0; i < curve.size(); ++i) {
      if (i) svg << ' ';
      svg << num(ax.map(curve[i].x)) << ',' << num(ay.map(curve[i].y));
    }
    svg << "\"/>\n";
  }
  svg << "<g class=\"points\" fill=\"#1f77b4\">\n";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    svg << "<circle cx=\"" << num(ax.map(xs[i])) << "\" cy=\"" << num(ay.map(ys[i]))
        << "\" r=\"3.5\"/>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace tspscale
