#include "nonolab/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace nonolab {

namespace {

constexpr const char* kColors[] = {"#1f4e79", "#b03a2e", "#1e8449", "#7d3c98", "#b9770e", "#2e4053"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
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
  std::snprintf(buf, sizeof buf, "%g", std::abs(v) < 1e-12 ? 0.0 : v);
  return buf;
}

void draw_marker(std::ostringstream& out, Marker m, double x, double y, const char* color, bool hollow) {
  const std::string fill = hollow ? "white" : color;
  const std::string style = "fill=\"" + fill + "\" stroke=\"" + color + "\" stroke-width=\"1.5\"";
  const double r = 4.0;
  switch (m) {
    case Marker::Circle:
      out << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"" << num(r) << "\" " << style << "/>\n";
      break;
    case Marker::Square:
      out << "<rect x=\"" << num(x - r) << "\" y=\"" << num(y - r) << "\" width=\"" << num(2 * r) << "\" height=\""
          << num(2 * r) << "\" " << style << "/>\n";
      break;
    case Marker::Triangle:
      out << "<polygon points=\"" << num(x) << ',' << num(y - r - 1) << ' ' << num(x - r - 1) << ',' << num(y + r)
          << ' ' << num(x + r + 1) << ',' << num(y + r) << "\" " << style << "/>\n";
      break;
    case Marker::Diamond:
      out << "<polygon points=\"" << num(x) << ',' << num(y - r - 1) << ' ' << num(x + r + 1) << ',' << num(y) << ' '
          << num(x) << ',' << num(y + r + 1) << ' ' << num(x - r - 1) << ',' << num(y) << "\" " << style << "/>\n";
      break;
    case Marker::Cross:
      out << "<path d=\"M" << num(x - r) << ' ' << num(y - r) << " L" << num(x + r) << ' ' << num(y + r) << " M"
          << num(x - r) << ' ' << num(y + r) << " L" << num(x + r) << ' ' << num(y - r) << "\" stroke=\"" << color
          << "\" stroke-width=\"2\"/>\n";
      break;
  }
}

std::pair<double, double> data_range(const PlotSpec& spec, bool x_axis) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& s : spec.series) {
    for (const auto& [x, y] : s.points) {
      const double v = x_axis ? x : y;
      if (!std::isfinite(v)) continue;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  if (!std::isfinite(lo)) return {0.0, 1.0};
  if (hi - lo < 1e-12) return {lo - 0.5, hi + 0.5};
  return {lo, hi};
}

}  // namespace

Marker marker_for(std::size_t index) {
  constexpr Marker order[] = {Marker::Circle, Marker::Square, Marker::Triangle, Marker::Diamond, Marker::Cross};
  return order[index % 5];
}

std::vector<double> nice_ticks(double lo, double hi, int target) {
  if (!(hi > lo)) return {lo};
  const double raw = (hi - lo) / std::max(target, 1);
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 2.5, 5.0, 10.0}) {
    step = m * mag;
    if (step >= raw) break;
  }
  std::vector<double> out;
  for (double t = std::ceil(lo / step - 1e-9) * step; t <= hi + step * 1e-9; t += step) out.push_back(t);
  return out;
}

std::string render_svg(const PlotSpec& spec) {
  const double left = 80, right = 170, top = 50, bottom = 60;
  const double w = spec.width, h = spec.height;
  const double pw = w - left - right, ph = h - top - bottom;
  const auto [x0, x1] = spec.x_range.value_or(data_range(spec, true));
  const auto [y0, y1] = spec.y_range.value_or(data_range(spec, false));
  auto sx = [&](double x) { return left + (x - x0) / (x1 - x0) * pw; };
  auto sy = [&](double y) { return top + ph - (y - y0) / (y1 - y0) * ph; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\"" << spec.height
      << "\" viewBox=\"0 0 " << spec.width << ' ' << spec.height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << num(left + pw / 2) << "\" y=\"28\" text-anchor=\"middle\" font-size=\"15\">"
      << escape(spec.title) << "</text>\n";

  for (double t : nice_ticks(x0, x1)) {
    const double x = sx(t);
    out << "<line x1=\"" << num(x) << "\" y1=\"" << num(top) << "\" x2=\"" << num(x) << "\" y2=\"" << num(top + ph)
        << "\" stroke=\"#e5e5e5\"/>\n";
    out << "<text x=\"" << num(x) << "\" y=\"" << num(top + ph + 18) << "\" text-anchor=\"middle\">" << tick_label(t)
        << "</text>\n";
  }
  for (double t : nice_ticks(y0, y1)) {
    const double y = sy(t);
    out << "<line x1=\"" << num(left) << "\" y1=\"" << num(y) << "\" x2=\"" << num(left + pw) << "\" y2=\"" << num(y)
        << "\" stroke=\"#e5e5e5\"/>\n";
    out << "<text x=\"" << num(left - 8) << "\" y=\"" << num(y + 4) << "\" text-anchor=\"end\">" << tick_label(t)
        << "</text>\n";
  }
  out << "<rect x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\"" << num(pw) << "\" height=\"" << num(ph)
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  out << "<text x=\"" << num(left + pw / 2) << "\" y=\"" << num(h - 18) << "\" text-anchor=\"middle\">"
      << escape(spec.x_label) << "</text>\n";
  out << "<text transform=\"translate(22 " << num(top + ph / 2) << ") rotate(-90)\" text-anchor=\"middle\">"
      << escape(spec.y_label) << "</text>\n";

  for (std::size_t i = 0; i < spec.series.size(); ++i) {
    const auto& s = spec.series[i];
    const char* color = kColors[i % std::size(kColors)];
    if (s.connect && s.points.size() > 1) {
      out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1\" stroke-opacity=\"0.6\" points=\"";
      for (const auto& [x, y] : s.points) out << num(sx(x)) << ',' << num(sy(y)) << ' ';
      out << "\"/>\n";
    }
    for (const auto& [x, y] : s.points) draw_marker(out, s.marker, sx(x), sy(y), color, s.hollow);
    const double ly = top + 14 + 20.0 * static_cast<double>(i);
    draw_marker(out, s.marker, left + pw + 22, ly, color, s.hollow);
    out << "<text x=\"" << num(left + pw + 34) << "\" y=\"" << num(ly + 4) << "\">" << escape(s.label) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace nonolab
