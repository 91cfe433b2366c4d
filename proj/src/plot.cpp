#include "fdesc/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <variant>

namespace fdesc {

namespace {

double to_double(const Rat& r) { return mpq_get_d(r.get_mpq_t()); }

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

const char* palette(int i) {
  static const char* colors[] = {"#1b6ca8", "#c0392b", "#27ae60", "#8e44ad",
                                 "#d35400", "#16a085", "#7f8c8d", "#2c3e50"};
  return colors[i % 8];
}

struct Frame {
  double lo = 0.0;
  double hi = 1.0;
  double px(double v, double a, double b) const {
    if (hi == lo) return (a + b) / 2;
    return a + (v - lo) / (hi - lo) * (b - a);
  }
};

constexpr double kSize = 420.0;
constexpr double kPad = 40.0;

std::string svg_open() {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
     << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return os.str();
}

}  // namespace

std::string svg_diagram(const Diagram& d) {
  Frame f;
  bool any = false;
  for (const DiagramPoint& p : d.points) {
    const double b = to_double(p.birth);
    if (!any) {
      f.lo = f.hi = b;
      any = true;
    }
    f.lo = std::min(f.lo, b);
    f.hi = std::max(f.hi, b);
    if (p.death) {
      f.lo = std::min(f.lo, to_double(*p.death));
      f.hi = std::max(f.hi, to_double(*p.death));
    }
  }
  if (!any) {
    f.lo = 0;
    f.hi = 1;
  }
  if (f.hi == f.lo) f.hi = f.lo + 1;
  const double span = f.hi - f.lo;
  f.lo -= span * 0.1;
  f.hi += span * 0.1;

  // The infinity line sits above the data range.
  const double inf_y = kPad * 0.6;
  auto sx = [&](double v) { return f.px(v, kPad, kSize - kPad); };
  auto sy = [&](double v) { return f.px(v, kSize - kPad, kPad); };

  std::ostringstream os;
  os << svg_open();
  os << "<line x1=\"" << fmt(sx(f.lo)) << "\" y1=\"" << fmt(sy(f.lo)) << "\" x2=\""
     << fmt(sx(f.hi)) << "\" y2=\"" << fmt(sy(f.hi))
     << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
  os << "<line x1=\"" << fmt(kPad) << "\" y1=\"" << fmt(inf_y) << "\" x2=\"" << fmt(kSize - kPad)
     << "\" y2=\"" << fmt(inf_y)
     << "\" stroke=\"#bbb\" stroke-width=\"1\" stroke-dasharray=\"6,4\"/>\n";
  os << "<text x=\"" << fmt(kSize - kPad + 4) << "\" y=\"" << fmt(inf_y + 4)
     << "\" font-size=\"12\">inf</text>\n";
  for (const DiagramPoint& p : d.points) {
    const double x = sx(to_double(p.birth));
    const double y = p.death ? sy(to_double(*p.death)) : inf_y;
    os << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"4\" fill=\""
       << palette(p.degree) << "\" fill-opacity=\"0.8\"><title>deg " << p.degree << " ("
       << rat_str(p.birth) << ", " << (p.death ? rat_str(*p.death) : std::string("inf"))
       << ")</title></circle>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string svg_steps(const std::vector<std::pair<std::string, StepFunction>>& tracks) {
  Frame fx;
  double vmin = 0;
  double vmax = 1;
  bool any = false;
  for (const auto& [label, s] : tracks) {
    for (const auto& [h, vals] : s.events) {
      const double hv = to_double(h);
      if (!any) {
        fx.lo = fx.hi = hv;
        any = true;
      }
      fx.lo = std::min(fx.lo, hv);
      fx.hi = std::max(fx.hi, hv);
      for (long v : vals) {
        vmin = std::min(vmin, static_cast<double>(v));
        vmax = std::max(vmax, static_cast<double>(v));
      }
    }
  }
  if (!any) {
    fx.lo = 0;
    fx.hi = 1;
  }
  if (fx.hi == fx.lo) fx.hi = fx.lo + 1;
  const double tail = (fx.hi - fx.lo) * 0.15;
  fx.lo -= tail;
  fx.hi += tail;
  Frame fy{vmin - 0.5, vmax + 0.5};

  auto sx = [&](double v) { return fx.px(v, kPad, kSize - kPad); };
  auto sy = [&](double v) { return fy.px(v, kSize - kPad, kPad); };

  std::ostringstream os;
  os << svg_open();
  os << "<line x1=\"" << fmt(kPad) << "\" y1=\"" << fmt(sy(0)) << "\" x2=\"" << fmt(kSize - kPad)
     << "\" y2=\"" << fmt(sy(0)) << "\" stroke=\"#ccc\" stroke-width=\"1\"/>\n";
  int color = 0;
  double legend_y = kPad * 0.6;
  for (const auto& [label, s] : tracks) {
    for (int comp = 0; comp < s.width; ++comp) {
      std::ostringstream pts;
      double x = sx(fx.lo);
      double y = sy(0);
      pts << fmt(x) << "," << fmt(y) << " ";
      for (const auto& [h, vals] : s.events) {
        const double nx = sx(to_double(h));
        const double ny = sy(static_cast<double>(vals[comp]));
        pts << fmt(nx) << "," << fmt(y) << " " << fmt(nx) << "," << fmt(ny) << " ";
        y = ny;
      }
      pts << fmt(sx(fx.hi)) << "," << fmt(y);
      os << "<polyline points=\"" << pts.str() << "\" fill=\"none\" stroke=\"" << palette(color)
         << "\" stroke-width=\"2\"" << (comp > 0 ? " stroke-dasharray=\"5,3\"" : "") << "/>\n";
    }
    os << "<text x=\"" << fmt(kPad) << "\" y=\"" << fmt(legend_y) << "\" font-size=\"12\" fill=\""
       << palette(color) << "\">" << label << "</text>\n";
    legend_y += 14;
    ++color;
  }
  os << "</svg>\n";
  return os.str();
}

std::string svg_regions(const std::vector<std::pair<std::string, CircularRegion>>& regions) {
  const double cx = kSize / 2;
  const double cy = kSize / 2;
  const double radius = kSize / 2 - kPad;

  std::ostringstream os;
  os << svg_open();
  os << "<circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy) << "\" r=\"" << fmt(radius)
     << "\" fill=\"none\" stroke=\"#ccc\" stroke-width=\"1\"/>\n";
  int color = 0;
  double legend_y = kPad * 0.6;
  for (const auto& [label, region] : regions) {
    for (const Arc& a : region.arcs) {
      const double t0 = std::atan2(to_double(a.start.y), to_double(a.start.x));
      double t1 = std::atan2(to_double(a.end.y), to_double(a.end.x));
      while (t1 <= t0) t1 += 2 * M_PI;
      // Two sub-arcs keep the path well-formed even at exactly half a turn.
      const double tm = (t0 + t1) / 2;
      auto px = [&](double t) { return cx + radius * std::cos(t); };
      auto py = [&](double t) { return cy - radius * std::sin(t); };
      os << "<path d=\"M " << fmt(px(t0)) << " " << fmt(py(t0)) << " A " << fmt(radius) << " "
         << fmt(radius) << " 0 0 0 " << fmt(px(tm)) << " " << fmt(py(tm)) << " A " << fmt(radius)
         << " " << fmt(radius) << " 0 0 0 " << fmt(px(t1)) << " " << fmt(py(t1))
         << "\" fill=\"none\" stroke=\"" << palette(color)
         << "\" stroke-width=\"10\" stroke-opacity=\"0.65\"/>\n";
      // Endpoint ticks: filled when the boundary ray belongs to the arc.
      for (int e = 0; e < 2; ++e) {
        const double t = e == 0 ? t0 : t1;
        const bool closed = e == 0 ? a.closed_start : a.closed_end;
        os << "<circle cx=\"" << fmt(px(t)) << "\" cy=\"" << fmt(py(t)) << "\" r=\"4\" fill=\""
           << (closed ? palette(color) : "white") << "\" stroke=\"" << palette(color)
           << "\" stroke-width=\"1.5\"/>\n";
      }
    }
    os << "<text x=\"" << fmt(kPad) << "\" y=\"" << fmt(legend_y) << "\" font-size=\"12\" fill=\""
       << palette(color) << "\">" << label << "</text>\n";
    legend_y += 14;
    ++color;
  }
  os << "</svg>\n";
  return os.str();
}

std::string csv_diagram(const Diagram& d) {
  std::ostringstream os;
  os << "birth,death,degree\n";
  for (const DiagramPoint& p : d.points) {
    os << rat_str(p.birth) << "," << (p.death ? rat_str(*p.death) : std::string("inf")) << ","
       << p.degree << "\n";
  }
  return os.str();
}

std::string csv_steps(const std::vector<std::pair<std::string, StepFunction>>& tracks) {
  std::ostringstream os;
  for (const auto& [label, s] : tracks) {
    os << "# " << label << "\n";
    os << "height";
    for (int i = 0; i < s.width; ++i) os << ",value" << i;
    os << "\n";
    for (const auto& [h, vals] : s.events) {
      os << rat_str(h);
      for (long v : vals) os << "," << v;
      os << "\n";
    }
  }
  return os.str();
}

namespace {

std::vector<std::pair<std::string, StepFunction>> tracks_of(const DescriptorValue& v) {
  std::vector<std::pair<std::string, StepFunction>> tracks;
  if (const auto* fam = std::get_if<BettiFamily>(&v.payload)) {
    for (const auto& [deg, curve] : fam->by_degree) {
      tracks.emplace_back("deg" + std::to_string(deg), curve);
    }
  } else if (const auto* s = std::get_if<StepFunction>(&v.payload)) {
    tracks.emplace_back(descriptor_name(v.kind), *s);
  }
  return tracks;
}

}  // namespace

std::string render_descriptor(const DescriptorValue& v, const std::string& format) {
  const bool svg = format == "svg";
  if (!svg && format != "csv") {
    throw std::invalid_argument("unknown export format: " + format);
  }
  switch (v.kind) {
    case DescriptorKind::PD:
    case DescriptorKind::APD: {
      const Diagram& d = std::get<Diagram>(v.payload);
      return svg ? svg_diagram(d) : csv_diagram(d);
    }
    case DescriptorKind::BC:
    case DescriptorKind::ABC:
    case DescriptorKind::ECC:
    case DescriptorKind::AECC: {
      const auto tracks = tracks_of(v);
      return svg ? svg_steps(tracks) : csv_steps(tracks);
    }
    case DescriptorKind::DV: {
      if (svg) throw std::invalid_argument("no plot rendering for vertex summaries");
      const VertexSummary& vs = std::get<VertexSummary>(v.payload);
      std::ostringstream os;
      os << "lowest_vertex\n";
      for (const Vec& p : vs.lowest) {
        for (std::size_t i = 0; i < p.size(); ++i) {
          os << (i ? "," : "") << rat_str(p[i]);
        }
        os << "\n";
      }
      os << "vertex_count," << vs.vertex_count << "\n";
      return os.str();
    }
    case DescriptorKind::D0: {
      if (svg) throw std::invalid_argument("no plot rendering for constant descriptors");
      return "value\n" + std::to_string(std::get<long>(v.payload)) + "\n";
    }
    case DescriptorKind::DR: {
      if (svg) throw std::invalid_argument("no plot rendering for membership indicators");
      return std::string("member\n") + (std::get<bool>(v.payload) ? "true" : "false") + "\n";
    }
  }
  throw std::logic_error("unreachable descriptor kind");
}

}  // namespace fdesc
