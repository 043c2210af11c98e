#pragma once

#include <string>
#include <vector>

#include "poncelet/geometry.hpp"

namespace poncelet::cli {

struct Style {
  std::string stroke = "black";
  std::string fill = "none";
  double width = 1.0;  // multiples of the canvas base stroke
  double opacity = 1.0;
  bool dashed = false;
};

/// Accumulates shapes in world coordinates (y up) and renders a static SVG
/// whose viewBox is the shape bounds plus a 5% margin.
class SvgCanvas {
 public:
  void ellipse(const Ellipse& e, const Style& style);
  void polygon(const std::vector<Point>& pts, const Style& style);
  void polyline(const std::vector<Point>& pts, const Style& style, bool closed = false);
  void marker(Point p, const std::string& label, const std::string& color);

  /// Appends another canvas to the right of this one, vertically centered.
  void place_right(const SvgCanvas& other, const std::string& caption_left, const std::string& caption_right);

  std::string render(int pixel_width = 800) const;

 private:
  struct Bounds {
    double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
    bool empty = true;
    void add(Point p);
    void add(const Bounds& b, Point offset);
  };
  enum class Kind { Ellipse, Polygon, Polyline, Marker, Text };
  struct Item {
    Kind kind;
    std::vector<Point> pts;  // world coordinates
    Ellipse ellipse;
    Style style;
    std::string label;
  };

  void include_ellipse(const Ellipse& e);

  std::vector<Item> items_;
  Bounds bounds_;
};

/// Shortest-stable fixed formatting for SVG attributes.
std::string svg_number(double v);

}  // namespace poncelet::cli
