#pragma once

#include <vector>

#include "rp2/config.hpp"
#include "rp2/coxeter.hpp"
#include "rp2/svg.hpp"

namespace rp2 {

SvgDoc render_tiling(const Tiling& t, const AffineChart& chart, bool even_only);

/// {word, vertices} array in chart coordinates, values carrying 12
/// significant digits.
nlohmann::json tiling_json(const Tiling& t, const AffineChart& chart, bool even_only);

/// Conic xz = level * y^2 (the H_t orbit level sets).
Conic level_conic(double level);

/// Coordinate triangle plus one conic level curve per entry, drawn inside
/// the positive 2-simplex in the chart c = (1,1,1).
SvgDoc render_conic_levels(const std::vector<double>& levels, int samples);

SvgDoc render_bulge_scene(const BulgeScene& scene, const PiecewiseConic& curve);

nlohmann::json bulge_report(const BulgeScene& scene, const PiecewiseConic& curve);
nlohmann::json violations_json(const LaminationReport& report);

Collineation converge_generator(const ConvergeScene& scene);

struct ConvergeResult {
  nlohmann::json report;
  bool ok = false;
};

/// Deformed boundaries of the orbit laminations over the configured depth
/// range, with the Hausdorff distance between consecutive depths.
ConvergeResult run_converge(const ConvergeScene& scene);

}  // namespace rp2
