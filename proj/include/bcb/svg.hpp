#pragma once

// Minimal self-contained SVG line and scatter plots.

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace bcb {

struct Series {
  std::string label;
  std::vector<Eigen::Vector2d> points;  // non-finite points break a line
  std::string color = "#1f77b4";
  bool markers = false;  // dots instead of a polyline
  bool closed = false;   // polygon outline
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool equal_aspect = false;
  int width = 640;
  int height = 480;
};

/// With `with_meta`, a generation timestamp comment is included; without it
/// the output is a pure function of the inputs.
std::string render_svg(const PlotSpec& spec, const std::vector<Series>& series, bool with_meta);

}  // namespace bcb
