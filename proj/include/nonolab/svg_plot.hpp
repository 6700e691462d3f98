// Minimal self-contained SVG scatter/line plots.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nonolab {

enum class Marker { Circle, Square, Triangle, Diamond, Cross };

// Marker for the i-th series, cycling through the shapes.
Marker marker_for(std::size_t index);

struct PlotSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;
  Marker marker = Marker::Circle;
  bool hollow = false;
  bool connect = true;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  // Axis ranges default to the data range.
  std::optional<std::pair<double, double>> x_range;
  std::optional<std::pair<double, double>> y_range;
  std::vector<PlotSeries> series;
  int width = 720;
  int height = 480;
};

std::string render_svg(const PlotSpec& spec);

// Round tick positions covering [lo, hi].
std::vector<double> nice_ticks(double lo, double hi, int target = 6);

}  // namespace nonolab
