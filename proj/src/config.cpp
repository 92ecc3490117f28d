#include "rp2/config.hpp"

#include <cmath>
#include <fstream>

namespace rp2 {

namespace {

Vec3 parse_vec3(const nlohmann::json& j, const char* what) {
  if (!j.is_array() || j.size() != 3)
    fail(Errc::invalid_argument, std::string(what) + " must be an array of 3 numbers");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

Conic parse_conic(const nlohmann::json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "unit_circle") return Conic::unit_circle();
    fail(Errc::invalid_argument, "unknown conic name: " + j.get<std::string>());
  }
  if (!j.is_array() || j.size() != 3)
    fail(Errc::invalid_argument, "conic must be \"unit_circle\" or a 3x3 matrix");
  Mat3 m;
  for (int r = 0; r < 3; ++r) {
    const Vec3 row = parse_vec3(j[static_cast<std::size_t>(r)], "conic row");
    for (int c = 0; c < 3; ++c) m(r, c) = row[static_cast<std::size_t>(c)];
  }
  return Conic::from(m);
}

CartanElement parse_weight(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("s") || !j.contains("t"))
    fail(Errc::invalid_argument, "weight must be an object with keys s and t");
  return {j["s"].get<double>(), j["t"].get<double>()};
}

ProjPoint angle_point(double deg) {
  const double rad = deg * M_PI / 180.0;
  return ProjPoint::from({std::cos(rad), std::sin(rad), 1.0});
}

Leaf parse_leaf(const nlohmann::json& j, bool is_unit_circle) {
  if (!j.is_object()) fail(Errc::invalid_argument, "leaf must be an object");
  const CartanElement w = parse_weight(j.at("weight"));
  if (j.contains("p_angle_deg") || j.contains("q_angle_deg")) {
    if (!is_unit_circle)
      fail(Errc::invalid_argument,
           "angle endpoints are only valid on the unit circle; use homogeneous triples");
    return Leaf{angle_point(j.at("p_angle_deg").get<double>()),
                angle_point(j.at("q_angle_deg").get<double>()), w};
  }
  return Leaf{ProjPoint::from(parse_vec3(j.at("p"), "leaf p")),
              ProjPoint::from(parse_vec3(j.at("q"), "leaf q")), w};
}

}  // namespace

BulgeScene parse_bulge_scene(const nlohmann::json& j) {
  if (!j.is_object()) fail(Errc::invalid_argument, "scene must be a JSON object");
  BulgeScene scene;
  const nlohmann::json conic_spec = j.value("conic", nlohmann::json("unit_circle"));
  scene.lamination.conic = parse_conic(conic_spec);
  const bool is_circle = conic_spec.is_string();

  if (!j.contains("basepoint"))
    fail(Errc::invalid_argument, "scene requires a basepoint [x, y]");
  const auto& bp = j.at("basepoint");
  if (!bp.is_array() || bp.size() != 2)
    fail(Errc::invalid_argument, "basepoint must be [x, y] in the chart c=(0,0,1)");
  scene.lamination.basepoint =
      ProjPoint::from({bp[0].get<double>(), bp[1].get<double>(), 1.0});

  scene.lamination.require_chamber = j.value("require_chamber", false);
  if (j.contains("leaves")) {
    if (!j.at("leaves").is_array()) fail(Errc::invalid_argument, "leaves must be an array");
    for (const auto& leaf : j.at("leaves"))
      scene.lamination.leaves.push_back(parse_leaf(leaf, is_circle));
  }

  if (j.contains("render")) {
    const auto& r = j.at("render");
    scene.render.overlay_original = r.value("overlay_original", false);
    scene.render.samples_per_arc = r.value("samples_per_arc", 160);
    if (scene.render.samples_per_arc < 2 || scene.render.samples_per_arc > 4096)
      fail(Errc::invalid_argument, "samples_per_arc must be in [2, 4096]");
  }
  return scene;
}

ConvergeScene parse_converge_scene(const nlohmann::json& j) {
  if (!j.is_object()) fail(Errc::invalid_argument, "scene must be a JSON object");
  ConvergeScene scene;
  const nlohmann::json conic_spec = j.value("conic", nlohmann::json("unit_circle"));
  scene.base.conic = parse_conic(conic_spec);
  const bool is_circle = conic_spec.is_string();

  if (!j.contains("basepoint"))
    fail(Errc::invalid_argument, "scene requires a basepoint [x, y]");
  const auto& bp = j.at("basepoint");
  if (!bp.is_array() || bp.size() != 2)
    fail(Errc::invalid_argument, "basepoint must be [x, y] in the chart c=(0,0,1)");
  scene.base.basepoint = ProjPoint::from({bp[0].get<double>(), bp[1].get<double>(), 1.0});

  if (!j.contains("axis") || !j.contains("seed"))
    fail(Errc::invalid_argument, "converge scene requires axis and seed");
  scene.axis_p_deg = j.at("axis").at("p_angle_deg").get<double>();
  scene.axis_q_deg = j.at("axis").at("q_angle_deg").get<double>();
  scene.translation = j.value("translation", 1.0);
  scene.seed = parse_leaf(j.at("seed"), is_circle);
  if (j.contains("depths")) {
    const auto& d = j.at("depths");
    if (!d.is_array() || d.size() != 2)
      fail(Errc::invalid_argument, "depths must be [from, to]");
    scene.depth_from = d[0].get<int>();
    scene.depth_to = d[1].get<int>();
  }
  scene.samples_per_arc = j.value("samples_per_arc", 96);
  if (scene.depth_from < 0 || scene.depth_to < scene.depth_from || scene.depth_to > 12)
    fail(Errc::invalid_argument, "depth range must satisfy 0 <= from <= to <= 12");
  if (scene.samples_per_arc < 16 || scene.samples_per_arc > 4096)
    fail(Errc::invalid_argument, "samples_per_arc must be in [16, 4096]");
  return scene;
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_failure, "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::invalid_argument, "JSON parse error in " + path + ": " + e.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io_failure, "cannot open " + path + " for writing");
  out << contents;
  if (!out) fail(Errc::io_failure, "write failed for " + path);
}

}  // namespace rp2
