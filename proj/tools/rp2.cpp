#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "rp2/render.hpp"
#include "rp2/rootsys.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitIo = 4;

int exit_code_for(const rp2::Error& e) {
  switch (e.code()) {
    case rp2::Errc::invalid_argument:
    case rp2::Errc::invalid_lamination:
      return kExitValidation;
    case rp2::Errc::io_failure:
      return kExitIo;
    default:
      return kExitNumeric;
  }
}

rp2::AffineChart parse_chart(const std::vector<double>& chart) {
  if (chart.size() != 3) rp2::fail(rp2::Errc::invalid_argument, "chart needs three components");
  if (std::abs(chart[0]) + std::abs(chart[1]) + std::abs(chart[2]) <= 1e-12)
    rp2::fail(rp2::Errc::invalid_argument, "chart covector must be nonzero");
  return rp2::AffineChart::from_covector({chart[0], chart[1], chart[2]});
}

int cmd_roots(bool as_json) {
  using namespace rp2;
  const RootCheckReport report = run_root_checks();
  if (as_json) {
    nlohmann::json checks;
    for (const auto& item : report.items) checks[item.name] = item.pass ? "pass" : "fail";
    nlohmann::json roots_table;
    for (const Root& r : roots())
      roots_table[r.name()] = {r.row[0], r.row[1]};
    nlohmann::json vectors_table;
    for (const RootVector& h : root_vectors())
      vectors_table[h.name()] = {{"s", h.h.s}, {"t", h.h.t}};
    const nlohmann::json out{{"chamber", "{ a(s,t) | s >= t >= -s/2 }"},
                             {"checks", checks},
                             {"root_vectors", vectors_table},
                             {"roots", roots_table}};
    std::cout << out.dump(2) << "\n";
    return report.all_pass() ? kExitOk : 1;
  }

  std::cout << "roots (row vectors acting on (s,t)):\n";
  for (const Root& r : roots())
    std::cout << "  " << r.name() << " = [" << r.row[0] << ", " << r.row[1] << "]\n";
  std::cout << "root vectors (trace-form duals):\n";
  for (const RootVector& h : root_vectors())
    std::cout << "  " << h.name() << " = a(" << h.h.s << ", " << h.h.t << ")\n";
  std::cout << "Weyl chamber: { a(s,t) | s >= t >= -s/2 }\n";
  std::cout << "singular rays: a(1,1) = h_13 + h_23 = h_12 + 2 h_23; "
               "a(2,-1) = h_12 + h_13 = 2 h_12 + h_23\n";
  std::cout << "sum of simple positive roots: a(1,0) = h_13 = h_12 + h_23 "
               "(generates H_t)\n";
  std::cout << "total order on a(2,1): ";
  const auto order = root_ordering();
  for (std::size_t k = 0; k < order.size(); ++k)
    std::cout << (k ? " > " : "") << order[k].name();
  std::cout << "\nchecks:\n";
  for (const auto& item : report.items)
    std::cout << "  [" << (item.pass ? "pass" : "FAIL") << "] " << item.name << "\n";
  return report.all_pass() ? kExitOk : 1;
}

int cmd_tile(int max_word_length, const std::vector<double>& chart_spec, const std::string& out,
             bool even_only, const std::string& json_out) {
  using namespace rp2;
  if (max_word_length < 0 || max_word_length > 10)
    fail(Errc::invalid_argument, "max word length must be in [0, 10]");
  const AffineChart chart = parse_chart(chart_spec);
  const Tiling t = tiling(CartanMatrixZ::t334(), max_word_length);
  const SvgDoc doc = render_tiling(t, chart, even_only);
  write_text_file(out, doc.emit());
  if (!json_out.empty())
    write_text_file(json_out, tiling_json(t, chart, even_only).dump(2) + "\n");
  std::cout << "tiles: " << t.tile_vertices.size() << " (depth " << max_word_length << ")\n";
  return kExitOk;
}

int cmd_conics(const std::vector<double>& levels, const std::string& out, int samples) {
  using namespace rp2;
  if (levels.empty() || levels.size() > 64)
    fail(Errc::invalid_argument, "levels must contain 1..64 entries");
  for (const double c : levels)
    if (!(c > 0) || !std::isfinite(c))
      fail(Errc::invalid_argument, "levels must be finite and positive");
  if (samples < 16 || samples > 4096)
    fail(Errc::invalid_argument, "samples must be in [16, 4096]");
  write_text_file(out, render_conic_levels(levels, samples).emit());
  std::cout << "levels: " << levels.size() << "\n";
  return kExitOk;
}

int cmd_bulge(const std::string& config, const std::string& out, bool overlay,
              const std::string& report_path) {
  using namespace rp2;
  BulgeScene scene = parse_bulge_scene(load_json_file(config));
  if (overlay) scene.render.overlay_original = true;

  const LaminationReport validation = validate_lamination(scene.lamination);
  if (!validation.ok()) {
    std::cout << violations_json(validation).dump(2) << "\n";
    return kExitValidation;
  }

  const PiecewiseConic curve = deformed_boundary(scene.lamination);
  if (!out.empty()) write_text_file(out, render_bulge_scene(scene, curve).emit());
  const nlohmann::json report = bulge_report(scene, curve);
  if (!report_path.empty())
    write_text_file(report_path, report.dump(2) + "\n");
  else
    std::cout << report.dump(2) << "\n";
  return kExitOk;
}

int cmd_converge(const std::string& config, const std::string& depths,
                 const std::string& report_path) {
  using namespace rp2;
  ConvergeScene scene = parse_converge_scene(load_json_file(config));
  if (!depths.empty()) {
    const auto sep = depths.find("..");
    if (sep == std::string::npos)
      fail(Errc::invalid_argument, "depth range must look like 1..5");
    try {
      scene.depth_from = std::stoi(depths.substr(0, sep));
      scene.depth_to = std::stoi(depths.substr(sep + 2));
    } catch (const std::exception&) {
      fail(Errc::invalid_argument, "depth range must look like 1..5");
    }
    if (scene.depth_from < 0 || scene.depth_to < scene.depth_from || scene.depth_to > 12)
      fail(Errc::invalid_argument, "depth range must satisfy 0 <= from <= to <= 12");
  }
  const ConvergeResult result = run_converge(scene);
  if (!report_path.empty())
    write_text_file(report_path, result.report.dump(2) + "\n");
  else
    std::cout << result.report.dump(2) << "\n";
  return result.ok ? kExitOk : kExitNumeric;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convex RP^2 toolkit: reflection tilings, root systems, and "
               "bulging deformations of conics"};
  app.require_subcommand(1);

  bool roots_json = false;
  bool roots_check = true;
  CLI::App* roots_cmd = app.add_subcommand("roots", "Print the root table and verify its identities");
  roots_cmd->add_flag("--json", roots_json, "Machine-readable report");
  roots_cmd->add_flag("--check,!--no-check", roots_check, "Run the identity checks (always on)");

  int tile_depth = 8;
  std::vector<double> tile_chart{1, 1, 1};
  std::string tile_out = "tiling.svg";
  std::string tile_json;
  bool even_only = false;
  CLI::App* tile_cmd = app.add_subcommand("tile", "Render the reflection-group tiling");
  tile_cmd->add_option("--max-word-length", tile_depth, "BFS depth (0..10)");
  tile_cmd->add_option("--chart", tile_chart, "Chart covector a,b,c")->delimiter(',')->expected(3);
  tile_cmd->add_option("--out", tile_out, "Output SVG path");
  tile_cmd->add_option("--json-out", tile_json, "Optional JSON export path");
  tile_cmd->add_flag("--even-only", even_only, "Restrict to determinant-1 elements");

  std::vector<double> levels;
  std::string conics_out = "conics.svg";
  int conics_samples = 256;
  CLI::App* conics_cmd = app.add_subcommand("conics", "Render conics tangent to the triangle");
  conics_cmd->add_option("--levels", levels, "Level values c for xz = c y^2")
      ->delimiter(',')
      ->required();
  conics_cmd->add_option("--out", conics_out, "Output SVG path");
  conics_cmd->add_option("--samples", conics_samples, "Samples per curve (16..4096)");

  std::string bulge_config;
  std::string bulge_out = "bulge.svg";
  std::string bulge_report_path;
  bool overlay = false;
  CLI::App* bulge_cmd = app.add_subcommand("bulge", "Deform a conic along a weighted lamination");
  bulge_cmd->add_option("--config", bulge_config, "Lamination JSON")->required();
  bulge_cmd->add_option("--out", bulge_out, "Output SVG path");
  bulge_cmd->add_option("--report", bulge_report_path, "Report JSON path (stdout if omitted)");
  bulge_cmd->add_flag("--overlay-original", overlay, "Draw the undeformed conic underneath");

  std::string conv_config;
  std::string conv_depths;
  std::string conv_report;
  CLI::App* conv_cmd =
      app.add_subcommand("converge", "Hausdorff diagnostics over orbit-lamination depths");
  conv_cmd->add_option("--config", conv_config, "Converge JSON")->required();
  conv_cmd->add_option("--depths", conv_depths, "Depth range, e.g. 1..5");
  conv_cmd->add_option("--report", conv_report, "Report JSON path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (roots_cmd->parsed()) return cmd_roots(roots_json);
    if (tile_cmd->parsed())
      return cmd_tile(tile_depth, tile_chart, tile_out, even_only, tile_json);
    if (conics_cmd->parsed()) return cmd_conics(levels, conics_out, conics_samples);
    if (bulge_cmd->parsed())
      return cmd_bulge(bulge_config, bulge_out, overlay, bulge_report_path);
    if (conv_cmd->parsed()) return cmd_converge(conv_config, conv_depths, conv_report);
  } catch (const rp2::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitValidation;
}
