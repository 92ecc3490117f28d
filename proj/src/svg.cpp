#include "rp2/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace rp2 {

std::string format_coord(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::string(buf);
}

void SvgDoc::polyline(std::vector<Vec2> pts, SvgStyle style, bool closed) {
  items_.push_back(Polyline{std::move(pts), std::move(style), closed});
}

void SvgDoc::line(Vec2 a, Vec2 b, SvgStyle style) {
  items_.push_back(Polyline{{a, b}, std::move(style), false});
}

void SvgDoc::text(Vec2 at, std::string s, double size, std::string fill) {
  items_.push_back(Text{at, std::move(s), size, std::move(fill)});
}

std::string SvgDoc::emit() const {
  double min_x = 0, min_y = 0, max_x = 1, max_y = 1;
  bool first = true;
  auto grow = [&](const Vec2& p) {
    if (!(std::isfinite(p.x) && std::isfinite(p.y)))
      fail(Errc::numeric_failure, "non-finite coordinate in SVG output");
    const double y = -p.y;  // y-down output
    if (first) {
      min_x = max_x = p.x;
      min_y = max_y = y;
      first = false;
    } else {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, y);
      max_y = std::max(max_y, y);
    }
  };
  for (const auto& item : items_) {
    if (const auto* pl = std::get_if<Polyline>(&item))
      for (const Vec2& p : pl->pts) grow(p);
    else if (const auto* tx = std::get_if<Text>(&item))
      grow(tx->at);
  }

  const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
  const double pad = 0.05 * span;
  min_x -= pad;
  min_y -= pad;
  max_x += pad;
  max_y += pad;

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" viewBox=\"";
  out += format_coord(min_x) + " " + format_coord(min_y) + " " + format_coord(max_x - min_x) +
         " " + format_coord(max_y - min_y) + "\">\n";
  const double stroke_unit = span / 1000.0;
  for (const auto& item : items_) {
    if (const auto* pl = std::get_if<Polyline>(&item)) {
      out += pl->closed ? "<polygon points=\"" : "<polyline points=\"";
      for (std::size_t k = 0; k < pl->pts.size(); ++k) {
        if (k) out += " ";
        out += format_coord(pl->pts[k].x) + "," + format_coord(-pl->pts[k].y);
      }
      out += "\" fill=\"" + pl->style.fill + "\" stroke=\"" + pl->style.stroke +
             "\" stroke-width=\"" + format_coord(pl->style.stroke_width * stroke_unit) + "\"";
      if (!pl->style.dash.empty()) out += " stroke-dasharray=\"" + pl->style.dash + "\"";
      out += " />\n";
    } else if (const auto* tx = std::get_if<Text>(&item)) {
      out += "<text x=\"" + format_coord(tx->at.x) + "\" y=\"" + format_coord(-tx->at.y) +
             "\" font-size=\"" + format_coord(tx->size * stroke_unit) + "\" fill=\"" + tx->fill +
             "\" font-family=\"monospace\">" + tx->s + "</text>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace rp2
