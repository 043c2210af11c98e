#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace poncelet::cli {

std::string svg_number(double v) {
  if (std::abs(v) < 5e-10) v = 0.0;  // avoid "-0" and denormal noise
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.7g", v);
  return buf;
}

namespace {

std::string coord(Point p) { return svg_number(p.x) + "," + svg_number(-p.y); }

std::string escape(const std::string& s) {
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

}  // namespace

void SvgCanvas::Bounds::add(Point p) {
  if (!is_finite(p)) return;
  if (empty) {
    min_x = max_x = p.x;
    min_y = max_y = p.y;
    empty = false;
    return;
  }
  min_x = std::min(min_x, p.x);
  max_x = std::max(max_x, p.x);
  min_y = std::min(min_y, p.y);
  max_y = std::max(max_y, p.y);
}

void SvgCanvas::Bounds::add(const Bounds& b, Point offset) {
  if (b.empty) return;
  add(Point{b.min_x, b.min_y} + offset);
  add(Point{b.max_x, b.max_y} + offset);
}

void SvgCanvas::include_ellipse(const Ellipse& e) {
  const double c = std::cos(e.theta), s = std::sin(e.theta);
  const double hx = std::hypot(e.a * c, e.b * s);
  const double hy = std::hypot(e.a * s, e.b * c);
  bounds_.add(e.center + Point{hx, hy});
  bounds_.add(e.center - Point{hx, hy});
}

void SvgCanvas::ellipse(const Ellipse& e, const Style& style) {
  items_.push_back({Kind::Ellipse, {}, e, style, {}});
  include_ellipse(e);
}

void SvgCanvas::polygon(const std::vector<Point>& pts, const Style& style) {
  items_.push_back({Kind::Polygon, pts, {}, style, {}});
  for (const Point& p : pts) bounds_.add(p);
}

void SvgCanvas::polyline(const std::vector<Point>& pts, const Style& style, bool closed) {
  Item item{Kind::Polyline, pts, {}, style, {}};
  if (closed && !pts.empty()) item.pts.push_back(pts.front());
  for (const Point& p : pts) bounds_.add(p);
  items_.push_back(std::move(item));
}

void SvgCanvas::marker(Point p, const std::string& label, const std::string& color) {
  Style style;
  style.fill = color;
  style.stroke = color;
  items_.push_back({Kind::Marker, {p}, {}, style, label});
  bounds_.add(p);
}

void SvgCanvas::place_right(const SvgCanvas& other, const std::string& caption_left,
                            const std::string& caption_right) {
  if (other.bounds_.empty) return;
  const double width = bounds_.empty ? 0.0 : bounds_.max_x - bounds_.min_x;
  const double gap = 0.1 * std::max({width, other.bounds_.max_x - other.bounds_.min_x, 1e-9});
  const double mid_self = bounds_.empty ? 0.0 : 0.5 * (bounds_.min_y + bounds_.max_y);
  const double mid_other = 0.5 * (other.bounds_.min_y + other.bounds_.max_y);
  const Point offset{(bounds_.empty ? 0.0 : bounds_.max_x + gap) - other.bounds_.min_x, mid_self - mid_other};

  const double top = std::max(bounds_.empty ? -1e300 : bounds_.max_y, other.bounds_.max_y + offset.y) + gap;
  const Bounds left = bounds_;
  for (Item item : other.items_) {
    for (Point& p : item.pts) p = p + offset;
    item.ellipse.center = item.ellipse.center + offset;
    items_.push_back(std::move(item));
  }
  bounds_.add(other.bounds_, offset);
  Style text;
  if (!left.empty && !caption_left.empty()) {
    items_.push_back({Kind::Text, {{left.min_x, top}}, {}, text, caption_left});
  }
  if (!caption_right.empty()) {
    items_.push_back({Kind::Text, {{other.bounds_.min_x + offset.x, top}}, {}, text, caption_right});
  }
  bounds_.add(Point{bounds_.min_x, top + 0.5 * gap});
}

std::string SvgCanvas::render(int pixel_width) const {
  Bounds b = bounds_;
  if (b.empty) b.add(Point{0.0, 0.0});
  const double w = std::max(b.max_x - b.min_x, 1e-9);
  const double h = std::max(b.max_y - b.min_y, 1e-9);
  const double extent = std::max(w, h);
  const double margin = 0.05 * extent;
  const double vx = b.min_x - margin, vy = -b.max_y - margin;
  const double vw = w + 2.0 * margin, vh = h + 2.0 * margin;
  const double base = 0.003 * extent;
  const int pixel_height = static_cast<int>(std::lround(pixel_width * vh / vw));

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << pixel_width << "\" height=\""
     << pixel_height << "\" viewBox=\"" << svg_number(vx) << ' ' << svg_number(vy) << ' ' << svg_number(vw) << ' '
     << svg_number(vh) << "\">\n"
     << "<rect x=\"" << svg_number(vx) << "\" y=\"" << svg_number(vy) << "\" width=\"" << svg_number(vw)
     << "\" height=\"" << svg_number(vh) << "\" fill=\"white\"/>\n";

  auto stroke_attrs = [&](const Style& s) {
    std::string out = " fill=\"" + s.fill + "\" stroke=\"" + s.stroke + "\" stroke-width=\"" +
                      svg_number(base * s.width) + "\"";
    if (s.opacity < 1.0) out += " stroke-opacity=\"" + svg_number(s.opacity) + "\"";
    if (s.dashed) out += " stroke-dasharray=\"" + svg_number(4.0 * base) + "," + svg_number(3.0 * base) + "\"";
    return out;
  };

  for (const Item& item : items_) {
    switch (item.kind) {
      case Kind::Ellipse: {
        const Ellipse& e = item.ellipse;
        const double deg = -e.theta * 180.0 / kPi;
        os << "<ellipse cx=\"" << svg_number(e.center.x) << "\" cy=\"" << svg_number(-e.center.y) << "\" rx=\""
           << svg_number(e.a) << "\" ry=\"" << svg_number(e.b) << "\"";
        if (svg_number(deg) != "0") {
          os << " transform=\"rotate(" << svg_number(deg) << ' ' << svg_number(e.center.x) << ' '
             << svg_number(-e.center.y) << ")\"";
        }
        os << stroke_attrs(item.style) << "/>\n";
        break;
      }
      case Kind::Polygon:
      case Kind::Polyline: {
        os << (item.kind == Kind::Polygon ? "<polygon" : "<polyline") << " points=\"";
        for (std::size_t i = 0; i < item.pts.size(); ++i) os << (i ? " " : "") << coord(item.pts[i]);
        os << "\"" << stroke_attrs(item.style) << "/>\n";
        break;
      }
      case Kind::Marker: {
        const Point p = item.pts.front();
        os << "<circle cx=\"" << svg_number(p.x) << "\" cy=\"" << svg_number(-p.y) << "\" r=\""
           << svg_number(2.5 * base) << "\" fill=\"" << item.style.fill << "\"/>\n";
        if (!item.label.empty()) {
          os << "<text x=\"" << svg_number(p.x + 3.0 * base) << "\" y=\"" << svg_number(-p.y - 3.0 * base)
             << "\" font-family=\"sans-serif\" font-size=\"" << svg_number(12.0 * base) << "\" fill=\""
             << item.style.fill << "\">" << escape(item.label) << "</text>\n";
        }
        break;
      }
      case Kind::Text: {
        const Point p = item.pts.front();
        os << "<text x=\"" << svg_number(p.x) << "\" y=\"" << svg_number(-p.y)
           << "\" font-family=\"sans-serif\" font-size=\"" << svg_number(14.0 * base) << "\" fill=\"black\">"
           << escape(item.label) << "</text>\n";
        break;
      }
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace poncelet::cli
