#include "rp2/render.hpp"

#include <cmath>
#include <optional>

namespace rp2 {

namespace {

double digits12(double v) { return std::strtod(format_coord(v).c_str(), nullptr); }

std::string weight_label(const CartanElement& w) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "s=%.3g t=%.3g", w.s, w.t);
  return std::string(buf);
}

std::vector<Vec2> conic_polyline(const Conic& q, int samples, const AffineChart& chart) {
  const Collineation back = conic_to_disk(q).inverse();
  std::vector<Vec2> pts;
  pts.reserve(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) {
    const double theta = 2.0 * M_PI * k / samples;
    const ProjPoint p = apply(back, ProjPoint::from({std::cos(theta), std::sin(theta), 1.0}));
    pts.push_back(chart_project(chart, p));
  }
  return pts;
}

}  // namespace

SvgDoc render_tiling(const Tiling& t, const AffineChart& chart, bool even_only) {
  SvgDoc doc;
  SvgStyle style;
  style.stroke = "#27496d";
  style.stroke_width = 1.0;
  for (std::size_t k = 0; k < t.tile_vertices.size(); ++k) {
    if (even_only && !is_even(t.elements[k])) continue;
    const auto& tri = t.tile_vertices[k];
    doc.polyline({chart_project(chart, tri[0]), chart_project(chart, tri[1]),
                  chart_project(chart, tri[2])},
                 style, true);
  }
  return doc;
}

nlohmann::json tiling_json(const Tiling& t, const AffineChart& chart, bool even_only) {
  nlohmann::json tiles = nlohmann::json::array();
  for (std::size_t k = 0; k < t.tile_vertices.size(); ++k) {
    if (even_only && !is_even(t.elements[k])) continue;
    nlohmann::json verts = nlohmann::json::array();
    for (const ProjPoint& v : t.tile_vertices[k]) {
      const Vec2 p = chart_project(chart, v);
      verts.push_back({digits12(p.x), digits12(p.y)});
    }
    tiles.push_back({{"word", t.elements[k].word}, {"vertices", verts}});
  }
  return nlohmann::json{{"chart", chart.describe()}, {"tiles", tiles}};
}

Conic level_conic(double level) {
  return Conic::from(Mat3{{0, 0, 0.5, 0, -level, 0, 0.5, 0, 0}});
}

SvgDoc render_conic_levels(const std::vector<double>& levels, int samples) {
  const AffineChart chart = AffineChart::sum_plane();
  SvgDoc doc;

  SvgStyle triangle_style;
  triangle_style.stroke = "#222222";
  triangle_style.stroke_width = 2.0;
  const Vec2 e1 = chart_project(chart, ProjPoint::from({1, 0, 0}));
  const Vec2 e2 = chart_project(chart, ProjPoint::from({0, 1, 0}));
  const Vec2 e3 = chart_project(chart, ProjPoint::from({0, 0, 1}));
  doc.polyline({e1, e2, e3}, triangle_style, true);

  SvgStyle curve_style;
  curve_style.stroke = "#b03535";
  curve_style.stroke_width = 1.4;
  const double t_span = 8.0;
  for (const double level : levels) {
    std::vector<Vec2> pts;
    pts.reserve(static_cast<std::size_t>(samples));
    for (int k = 0; k < samples; ++k) {
      const double t = -t_span + 2.0 * t_span * k / (samples - 1);
      const double r = std::sqrt(level);
      const ProjPoint p = ProjPoint::from({r * std::exp(t), 1.0, r * std::exp(-t)});
      pts.push_back(chart_project(chart, p));
    }
    doc.polyline(pts, curve_style, false);
  }
  return doc;
}

SvgDoc render_bulge_scene(const BulgeScene& scene, const PiecewiseConic& curve) {
  const AffineChart chart = AffineChart::z_plane();
  SvgDoc doc;

  if (scene.render.overlay_original) {
    SvgStyle base_style;
    base_style.stroke = "#999999";
    base_style.stroke_width = 1.2;
    base_style.dash = "8,6";
    doc.polyline(conic_polyline(scene.lamination.conic, 256, chart), base_style, true);
  }

  SvgStyle chord_style;
  chord_style.stroke = "#2e6da4";
  chord_style.stroke_width = 1.2;
  for (const Leaf& leaf : scene.lamination.leaves) {
    const Vec2 a = chart_project(chart, leaf.p);
    const Vec2 b = chart_project(chart, leaf.q);
    doc.line(a, b, chord_style);
    doc.text({(a.x + b.x) / 2, (a.y + b.y) / 2}, weight_label(leaf.weight), 12.0, "#2e6da4");
  }

  // Basepoint marker.
  {
    const Vec2 b = chart_project(chart, scene.lamination.basepoint);
    SvgStyle mark;
    mark.stroke = "#444444";
    mark.stroke_width = 1.0;
    const double r = 0.02;
    doc.line({b.x - r, b.y - r}, {b.x + r, b.y + r}, mark);
    doc.line({b.x - r, b.y + r}, {b.x + r, b.y - r}, mark);
  }

  SvgStyle curve_style;
  curve_style.stroke = "#111111";
  curve_style.stroke_width = 2.0;
  doc.polyline(sample_curve_chart(curve, scene.render.samples_per_arc, chart), curve_style, true);
  return doc;
}

nlohmann::json bulge_report(const BulgeScene& scene, const PiecewiseConic& curve) {
  const AffineChart chart = AffineChart::z_plane();
  const double c1 = check_c1_junctions(curve, chart);
  const ConvexityReport convexity = check_convexity(curve, 256, chart);
  return nlohmann::json{
      {"arc_count", curve.arcs.size()},
      {"c1_max_mismatch_rad", c1},
      {"chart", chart.describe()},
      {"convex", convexity.convex},
      {"leaf_count", scene.lamination.leaves.size()},
      {"winding", convexity.winding},
  };
}

nlohmann::json violations_json(const LaminationReport& report) {
  nlohmann::json arr = nlohmann::json::array();
  for (const LaminationViolation& v : report.violations) {
    nlohmann::json item{{"what", v.describe()}};
    if (v.leaf_a >= 0) item["leaf_a"] = v.leaf_a;
    if (v.leaf_b >= 0) item["leaf_b"] = v.leaf_b;
    arr.push_back(item);
  }
  return nlohmann::json{{"violations", arr}};
}

Collineation converge_generator(const ConvergeScene& scene) {
  const auto pt = [](double deg) {
    const double rad = deg * M_PI / 180.0;
    return ProjPoint::from({std::cos(rad), std::sin(rad), 1.0});
  };
  const Collineation frame =
      leaf_basis(scene.base.conic, pt(scene.axis_p_deg), pt(scene.axis_q_deg));
  return frame * exp_cartan({scene.translation, 0}) * frame.inverse();
}

ConvergeResult run_converge(const ConvergeScene& scene) {
  const Collineation g = converge_generator(scene);
  ConvergeResult result;
  nlohmann::json entries = nlohmann::json::array();
  bool ok = true;

  std::optional<std::vector<Vec2>> prev;
  const AffineChart chart = AffineChart::z_plane();
  const int start = std::max(0, scene.depth_from - 1);
  for (int depth = start; depth <= scene.depth_to; ++depth) {
    const Lamination lam =
        orbit_lamination(g, scene.base.conic, scene.seed, scene.base.basepoint, depth);
    const PiecewiseConic curve = deformed_boundary(lam);

    bool closed = curve.closed && !curve.arcs.empty();
    for (std::size_t k = 0; k < curve.arcs.size() && closed; ++k)
      closed = proj_equal(curve.arcs[k].end, curve.arcs[(k + 1) % curve.arcs.size()].start, 1e-9);
    const ConvexityReport convexity = check_convexity(curve, 256, chart);
    const std::vector<Vec2> samples = sample_curve_chart(curve, scene.samples_per_arc, chart);

    std::optional<double> dist;
    if (prev) {
      const double d = hausdorff_distance(samples, *prev);
      dist = d;
      ok = ok && std::isfinite(d);
    }
    prev = samples;

    if (depth >= scene.depth_from) {
      entries.push_back({{"arc_count", curve.arcs.size()},
                         {"closed", closed},
                         {"convex", convexity.convex},
                         {"depth", depth},
                         {"hausdorff_to_previous",
                          dist ? nlohmann::json(*dist) : nlohmann::json(nullptr)},
                         {"leaf_count", lam.leaves.size()}});
      ok = ok && closed && convexity.convex;
    }
  }
  result.report = nlohmann::json{{"chart", chart.describe()},
                                 {"entries", entries},
                                 {"translation", scene.translation}};
  result.ok = ok;
  return result;
}

}  // namespace rp2
