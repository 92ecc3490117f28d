#pragma once

#include <string>

#include <json.hpp>

#include "rp2/bulge.hpp"

namespace rp2 {

/// Rendering options a scene file may carry alongside the lamination.
struct BulgeRenderOptions {
  bool overlay_original = false;
  int samples_per_arc = 160;
};

struct BulgeScene {
  Lamination lamination;
  BulgeRenderOptions render;
};

/// Parses the lamination schema:
///   { "conic": "unit_circle" | [[..],[..],[..]],
///     "basepoint": [x, y],            (chart c = (0,0,1))
///     "require_chamber": bool,
///     "leaves": [ { "p_angle_deg": .., "q_angle_deg": .., "weight": {...} }
///               | { "p": [x,y,z], "q": [x,y,z], "weight": {...} } ] }
/// Angle endpoints are only meaningful on the unit circle; general conics
/// take homogeneous triples. Throws Errc::invalid_argument on schema errors.
BulgeScene parse_bulge_scene(const nlohmann::json& j);

/// Orbit-refinement scene for the convergence diagnostic: a conic-preserving
/// hyperbolic generator given by its axis chord and translation length, a
/// seed leaf, and a depth range.
struct ConvergeScene {
  Lamination base;          // conic + basepoint, no leaves
  Leaf seed;
  double axis_p_deg = 180;
  double axis_q_deg = 0;
  double translation = 1.0;
  int depth_from = 1;
  int depth_to = 5;
  int samples_per_arc = 96;
};

ConvergeScene parse_converge_scene(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);

}  // namespace rp2
