#pragma once

#include <string>
#include <variant>
#include <vector>

#include "rp2/projlin.hpp"

namespace rp2 {

struct SvgStyle {
  std::string stroke = "#000000";
  double stroke_width = 2.0;
  std::string fill = "none";
  std::string dash;  // e.g. "6,4"; empty for solid
};

/// Deterministic SVG document: fixed canvas 1000x1000, viewBox fitted to the
/// content with 5% padding, fixed attribute order, 12-significant-digit
/// coordinates, no timestamps. Geometry is given y-up and flipped on output.
class SvgDoc {
 public:
  void polyline(std::vector<Vec2> pts, SvgStyle style, bool closed = false);
  void line(Vec2 a, Vec2 b, SvgStyle style);
  void text(Vec2 at, std::string s, double size = 14.0, std::string fill = "#333333");

  bool empty() const { return items_.empty(); }

  /// Serialized document; throws Errc::numeric_failure if any coordinate is
  /// not finite.
  std::string emit() const;

 private:
  struct Polyline {
    std::vector<Vec2> pts;
    SvgStyle style;
    bool closed;
  };
  struct Text {
    Vec2 at;
    std::string s;
    double size;
    std::string fill;
  };
  std::vector<std::variant<Polyline, Text>> items_;
};

/// printf %.12g formatting shared by SVG and JSON exports.
std::string format_coord(double v);

}  // namespace rp2
