#include "unruh/figure.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace unruh {

namespace {

double measure_value(const SweepRow& r, Measure m) {
  switch (m) {
    case Measure::Concurrence: return r.concurrence;
    case Measure::Fidelity: return r.fidelity;
    case Measure::Telp: return r.telp;
    case Measure::Purity: return r.purity;
    case Measure::Separability: break;
  }
  throw std::invalid_argument("separability has no CSV column and cannot be plotted");
}

int measure_column(Measure m) {
  switch (m) {
    case Measure::Concurrence: return 5;
    case Measure::Fidelity: return 6;
    case Measure::Telp: return 7;
    case Measure::Purity: return 8;
    case Measure::Separability: break;
  }
  throw std::invalid_argument("separability has no CSV column and cannot be plotted");
}

std::vector<double> distinct(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

// Piecewise-linear approximation of the viridis colormap.
std::string color(double t) {
  static constexpr std::array<std::array<double, 3>, 5> stops{{
      {68, 1, 84}, {59, 82, 139}, {33, 145, 140}, {94, 201, 98}, {253, 231, 37}}};
  t = std::clamp(t, 0.0, 1.0) * (stops.size() - 1);
  const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(t), stops.size() - 2);
  const double f = t - static_cast<double>(k);
  char buf[8];
  int rgb[3];
  for (int c = 0; c < 3; ++c)
    rgb[c] = static_cast<int>(std::lround(stops[k][c] + f * (stops[k + 1][c] - stops[k][c])));
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", rgb[0], rgb[1], rgb[2]);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace

Heatmap make_heatmap(std::span<const SweepRow> rows, const FigureSpec& spec) {
  measure_column(spec.measure);
  std::vector<SweepRow> sel;
  for (const SweepRow& r : rows)
    if (r.region == spec.region) sel.push_back(r);
  if (sel.empty())
    throw std::invalid_argument("figure: no rows for region " + to_string(spec.region));

  std::vector<double> ra, rb, pv;
  bool locked = true;
  for (const SweepRow& r : sel) {
    ra.push_back(r.r_a);
    rb.push_back(r.r_b);
    pv.push_back(r.param);
    locked = locked && r.r_a == r.r_b;
  }
  ra = distinct(std::move(ra));
  rb = distinct(std::move(rb));
  pv = distinct(std::move(pv));

  struct Candidate {
    std::string name;
    int column;
    std::vector<double> values;
    double (*get)(const SweepRow&);
  };
  std::vector<Candidate> axes;
  if (locked && ra.size() > 1) {
    axes.push_back({"r", 1, ra, [](const SweepRow& r) { return r.r_a; }});
  } else {
    if (ra.size() > 1) axes.push_back({"r_a", 1, ra, [](const SweepRow& r) { return r.r_a; }});
    if (rb.size() > 1) axes.push_back({"r_b", 2, rb, [](const SweepRow& r) { return r.r_b; }});
  }
  if (pv.size() > 1)
    axes.push_back({spec.param_name, 3, pv, [](const SweepRow& r) { return r.param; }});
  if (axes.size() != 2)
    throw std::invalid_argument("figure: two axes required, data spans " +
                                std::to_string(axes.size()));

  // With a family axis, put it on x and the acceleration on y.
  if (axes[1].column == 3) std::swap(axes[0], axes[1]);

  Heatmap map;
  map.x_name = axes[0].name;
  map.y_name = axes[1].name;
  map.x_column = axes[0].column;
  map.y_column = axes[1].column;
  map.x = axes[0].values;
  map.y = axes[1].values;
  map.values.assign(map.x.size() * map.y.size(), std::numeric_limits<double>::quiet_NaN());
  const auto index_of = [](const std::vector<double>& v, double x) {
    return static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), x) - v.begin());
  };
  for (const SweepRow& r : sel) {
    const std::size_t i = index_of(map.x, axes[0].get(r));
    const std::size_t j = index_of(map.y, axes[1].get(r));
    map.values[j * map.x.size() + i] = measure_value(r, spec.measure);
  }
  return map;
}

std::string render_svg(const Heatmap& map, const FigureSpec& spec) {
  constexpr double W = 640, H = 520;
  constexpr double x0 = 80, y0 = 50, pw = 440, ph = 400;
  const std::size_t nx = map.x.size(), ny = map.y.size();

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (double v : map.values)
    if (std::isfinite(v)) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  if (!std::isfinite(lo)) lo = hi = 0.0;
  const double span = hi > lo ? hi - lo : 1.0;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
     << "\" viewBox=\"0 0 " << W << ' ' << H << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  const std::string title =
      spec.title.empty() ? to_string(spec.measure) + ", region " + to_string(spec.region)
                         : spec.title;
  os << "<text x=\"" << W / 2 << "\" y=\"28\" text-anchor=\"middle\" font-size=\"15\">"
     << xml_escape(title) << "</text>\n";

  const double cw = pw / static_cast<double>(nx);
  const double ch = ph / static_cast<double>(ny);
  os << "<g shape-rendering=\"crispEdges\">\n";
  for (std::size_t j = 0; j < ny; ++j) {
    for (std::size_t i = 0; i < nx; ++i) {
      const double v = map.values[j * nx + i];
      const std::string fill = std::isfinite(v) ? color((v - lo) / span) : "#cccccc";
      os << "<rect x=\"" << fmt("%.3f", x0 + cw * i) << "\" y=\""
         << fmt("%.3f", y0 + ph - ch * (j + 1)) << "\" width=\"" << fmt("%.3f", cw + 0.01)
         << "\" height=\"" << fmt("%.3f", ch + 0.01) << "\" fill=\"" << fill << "\"/>\n";
    }
  }
  os << "</g>\n";
  os << "<rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << pw << "\" height=\"" << ph
     << "\" fill=\"none\" stroke=\"black\"/>\n";

  constexpr int kTicks = 5;
  for (int k = 0; k < kTicks; ++k) {
    const double f = static_cast<double>(k) / (kTicks - 1);
    const double xv = map.x.front() + f * (map.x.back() - map.x.front());
    const double yv = map.y.front() + f * (map.y.back() - map.y.front());
    const double px = x0 + f * pw;
    const double py = y0 + ph - f * ph;
    os << "<line x1=\"" << px << "\" y1=\"" << y0 + ph << "\" x2=\"" << px << "\" y2=\""
       << y0 + ph + 5 << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << px << "\" y=\"" << y0 + ph + 18 << "\" text-anchor=\"middle\">"
       << fmt("%.3g", xv) << "</text>\n";
    os << "<line x1=\"" << x0 - 5 << "\" y1=\"" << py << "\" x2=\"" << x0 << "\" y2=\"" << py
       << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << x0 - 8 << "\" y=\"" << py + 4 << "\" text-anchor=\"end\">"
       << fmt("%.3g", yv) << "</text>\n";
  }
  os << "<text x=\"" << x0 + pw / 2 << "\" y=\"" << y0 + ph + 40 << "\" text-anchor=\"middle\">"
     << xml_escape(map.x_name) << "</text>\n";
  os << "<text x=\"24\" y=\"" << y0 + ph / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 24 "
     << y0 + ph / 2 << ")\">" << xml_escape(map.y_name) << "</text>\n";

  // Color bar.
  constexpr double bx = 550, bw = 18;
  constexpr int kBands = 64;
  for (int k = 0; k < kBands; ++k) {
    const double t = (k + 0.5) / kBands;
    os << "<rect x=\"" << bx << "\" y=\"" << fmt("%.3f", y0 + ph - ph * (k + 1) / kBands)
       << "\" width=\"" << bw << "\" height=\"" << fmt("%.3f", ph / kBands + 0.01)
       << "\" fill=\"" << color(t) << "\"/>\n";
  }
  os << "<rect x=\"" << bx << "\" y=\"" << y0 << "\" width=\"" << bw << "\" height=\"" << ph
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  os << "<text x=\"" << bx + bw + 4 << "\" y=\"" << y0 + ph << "\">" << fmt("%.3g", lo)
     << "</text>\n";
  os << "<text x=\"" << bx + bw + 4 << "\" y=\"" << y0 + 10 << "\">" << fmt("%.3g", hi)
     << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

std::string render_gnuplot(const Heatmap& map, const FigureSpec& spec) {
  const std::string region = to_string(spec.region);
  const std::string m = to_string(spec.measure);
  std::ostringstream os;
  os << "# " << m << ", region " << region << "\n"
     << "set datafile separator ','\n"
     << "set key autotitle columnhead\n"
     << "set title '" << (spec.title.empty() ? m + ", region " + region : spec.title) << "'\n"
     << "set xlabel '" << map.x_name << "'\n"
     << "set ylabel '" << map.y_name << "'\n"
     << "set cblabel '" << m << "'\n"
     << "set view map\n"
     << "set dgrid3d " << map.y.size() << ',' << map.x.size() << "\n"
     << "splot '" << spec.csv_path << "' using " << map.x_column << ':' << map.y_column
     << ":(strcol(4) eq '" << region << "' ? column(" << measure_column(spec.measure)
     << ") : 1/0) with pm3d notitle\n";
  return os.str();
}

std::vector<std::string> render_figure(std::span<const SweepRow> rows, const FigureSpec& spec,
                                       const std::string& stem) {
  const Heatmap map = make_heatmap(rows, spec);
  const std::string svg = stem + ".svg";
  const std::string gp = stem + ".gp";
  write_file(svg, render_svg(map, spec));
  write_file(gp, render_gnuplot(map, spec));
  return {svg, gp};
}

std::vector<std::string> render_sweep_figures(std::span<const SweepRow> rows,
                                              const SweepConfig& cfg, const std::string& csv_path,
                                              const std::string& stem) {
  std::vector<std::string> written;
  for (const RegionSelector& sel : cfg.regions) {
    for (Measure m : cfg.measures) {
      if (m == Measure::Separability) continue;
      FigureSpec spec;
      spec.region = sel;
      spec.measure = m;
      spec.param_name = param_column(cfg);
      spec.csv_path = csv_path;
      if (!cfg.label.empty())
        spec.title = "figure " + cfg.label + ": " + to_string(m) + ", region " + to_string(sel);
      const auto files = render_figure(rows, spec, stem + "_" + to_string(sel) + "_" + to_string(m));
      written.insert(written.end(), files.begin(), files.end());
    }
  }
  return written;
}

}  // namespace unruh
