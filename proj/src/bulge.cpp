#include "rp2/bulge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace rp2 {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

double mod_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0) r += kTwoPi;
  return r;
}

double angular_gap(double a, double b) {
  const double d = mod_angle(a - b);
  return std::min(d, kTwoPi - d);
}

/// Per-lamination geometry in the disk model of the base conic.
struct DiskScene {
  Collineation to_disk;
  Collineation from_disk;
  std::vector<double> ang_p, ang_q;
  std::vector<Vec3> chord;       // normalized chord line in disk coordinates
  std::vector<int> base_side;    // sign of chord evaluated at the basepoint
  std::vector<int> orient;       // orientation of the triangle (p, q, basepoint)
  Vec2 base{};
};

double disk_angle(const Collineation& to_disk, const ProjPoint& p) {
  Vec3 v = apply(to_disk, p).v;
  if (v[2] < 0) v = scale(v, -1.0);
  if (std::abs(v[2]) <= 1e-12) fail(Errc::numeric_failure, "disk angle of a point at infinity");
  return std::atan2(v[1] / v[2], v[0] / v[2]);
}

ProjPoint disk_point(const Collineation& from_disk, double theta) {
  return apply(from_disk, ProjPoint::from({std::cos(theta), std::sin(theta), 1.0}));
}

DiskScene build_disk_scene(const Lamination& lam) {
  DiskScene s;
  s.to_disk = conic_to_disk(lam.conic);
  s.from_disk = s.to_disk.inverse();
  const Vec3 b = apply(s.to_disk, lam.basepoint).v;
  const double be = b[0] * b[0] + b[1] * b[1] - b[2] * b[2];
  if (!(be < -1e-9)) fail(Errc::invalid_lamination, "basepoint not interior to the conic");
  s.base = {b[0] / b[2], b[1] / b[2]};
  for (const Leaf& leaf : lam.leaves) {
    const ProjPoint dp = apply(s.to_disk, leaf.p);
    const ProjPoint dq = apply(s.to_disk, leaf.q);
    const double tp = mod_angle(disk_angle(s.to_disk, leaf.p));
    const double tq = mod_angle(disk_angle(s.to_disk, leaf.q));
    s.ang_p.push_back(tp);
    s.ang_q.push_back(tq);
    const Vec3 line = join(dp, dq).l;
    s.chord.push_back(line);
    const double e = line[0] * s.base.x + line[1] * s.base.y + line[2];
    s.base_side.push_back(e >= 0 ? 1 : -1);
    // Orientation of (p, q, basepoint) in the affine disk; built from the
    // angles so the sign cannot flip with the homogeneous representative.
    const Vec3 pa = {std::cos(tp), std::sin(tp), 1.0};
    const Vec3 qa = {std::cos(tq), std::sin(tq), 1.0};
    const Vec3 ba = {s.base.x, s.base.y, 1.0};
    s.orient.push_back(dot(cross(pa, qa), ba) >= 0 ? 1 : -1);
  }
  return s;
}

/// Circle arc on the far side of a chord from the basepoint, as a ccw
/// interval [start, start+len] with the leaf endpoints at the ends.
struct FarArc {
  double start = 0;
  double len = 0;
  bool from_is_p = true;
};

FarArc far_arc(const DiskScene& s, int i) {
  const std::size_t k = static_cast<std::size_t>(i);
  const double a = s.ang_p[k];
  const double b = s.ang_q[k];
  const double len_pq = mod_angle(b - a);
  const double mid = a + len_pq / 2.0;
  const Vec3 m = {std::cos(mid), std::sin(mid), 1.0};
  const double e = s.chord[k][0] * m[0] + s.chord[k][1] * m[1] + s.chord[k][2];
  const int mid_side = e >= 0 ? 1 : -1;
  if (mid_side != s.base_side[k]) return {a, len_pq, true};
  return {b, kTwoPi - len_pq, false};
}

bool interval_contains(double start, double len, double theta, double margin) {
  const double d = mod_angle(theta - start);
  return d > margin && d < len - margin;
}

}  // namespace

Collineation conic_to_disk(const Conic& q) {
  if (!q.nondegenerate()) fail(Errc::degenerate_conic, "conic_to_disk");
  SymmetricEigen eig = eigen_symmetric(q.q);
  int negatives = 0;
  for (double v : eig.values)
    if (v < 0) ++negatives;
  Vec3 vals = eig.values;
  if (negatives == 2) {
    for (auto& v : vals) v = -v;
    negatives = 1;
  }
  if (negatives != 1) fail(Errc::degenerate_conic, "conic has empty real locus");
  // Columns: the two positive directions first, the negative one last,
  // positive pair in decreasing eigenvalue order.
  std::array<int, 3> idx = {0, 1, 2};
  std::sort(idx.begin(), idx.end(), [&](int x, int y) {
    const bool nx = vals[static_cast<std::size_t>(x)] < 0;
    const bool ny = vals[static_cast<std::size_t>(y)] < 0;
    if (nx != ny) return !nx;
    return vals[static_cast<std::size_t>(x)] > vals[static_cast<std::size_t>(y)];
  });
  for (int k = 0; k < 2; ++k)
    if (vals[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])] <= 1e-12)
      fail(Errc::degenerate_conic, "conic nearly degenerate");
  if (vals[static_cast<std::size_t>(idx[2])] >= -1e-12)
    fail(Errc::degenerate_conic, "conic nearly degenerate");
  Mat3 t;
  for (int r = 0; r < 3; ++r) {
    const int src = idx[static_cast<std::size_t>(r)];
    const double s = std::sqrt(std::abs(vals[static_cast<std::size_t>(src)]));
    for (int cc = 0; cc < 3; ++cc) t(r, cc) = s * eig.vectors(cc, src);
  }
  const Collineation out = Collineation::from(t);
  if (!conic_equal(apply_to_conic(out, q), Conic::unit_circle(), 1e-8))
    fail(Errc::numeric_failure, "conic_to_disk verification failed");
  return out;
}

Collineation leaf_basis(const Conic& q, const ProjPoint& p, const ProjPoint& q_pt) {
  return Collineation::from(conic_chord_frame(q, p, q_pt));
}

Collineation bulge_transform(const Conic& q, const Leaf& leaf) {
  const Collineation m = leaf_basis(q, leaf.p, leaf.q);
  return m * exp_cartan(leaf.weight) * m.inverse();
}

CartanElement conic_stabilizer_direction(const Conic& q, const Leaf& leaf) {
  const CartanElement dir{1, 0};
  const Collineation m = leaf_basis(q, leaf.p, leaf.q);
  const Collineation b = m * exp_cartan(dir) * m.inverse();
  if (!conic_equal(apply_to_conic(b, q), q, 1e-10))
    fail(Errc::numeric_failure, "stabilizer direction did not preserve the conic");
  return dir;
}

std::string LaminationViolation::describe() const {
  const char* what = "?";
  switch (kind) {
    case Kind::conic_degenerate: what = "base conic is degenerate"; break;
    case Kind::conic_not_real: what = "base conic has empty real locus"; break;
    case Kind::endpoint_off_conic: what = "leaf endpoint not on the conic"; break;
    case Kind::degenerate_leaf: what = "leaf endpoints coincide"; break;
    case Kind::shared_endpoint: what = "two leaves share an endpoint"; break;
    case Kind::interleaved: what = "leaf chords cross"; break;
    case Kind::basepoint_not_interior: what = "basepoint not interior"; break;
    case Kind::basepoint_on_leaf: what = "basepoint on a leaf chord"; break;
    case Kind::weight_outside_chamber: what = "weight outside the closed Weyl chamber"; break;
  }
  std::string s = what;
  if (leaf_a >= 0) s += " (leaf " + std::to_string(leaf_a);
  if (leaf_b >= 0) s += ", leaf " + std::to_string(leaf_b);
  if (leaf_a >= 0) s += ")";
  return s;
}

LaminationReport validate_lamination(const Lamination& lam) {
  LaminationReport rep;
  auto push = [&rep](LaminationViolation::Kind k, int a = -1, int b = -1) {
    rep.violations.push_back({k, a, b});
  };

  if (!lam.conic.nondegenerate()) {
    push(LaminationViolation::Kind::conic_degenerate);
    return rep;
  }
  Collineation to_disk;
  try {
    to_disk = conic_to_disk(lam.conic);
  } catch (const Error&) {
    push(LaminationViolation::Kind::conic_not_real);
    return rep;
  }

  const int n = static_cast<int>(lam.leaves.size());
  std::vector<bool> usable(static_cast<std::size_t>(n), true);
  for (int i = 0; i < n; ++i) {
    const Leaf& leaf = lam.leaves[static_cast<std::size_t>(i)];
    if (!on_conic(lam.conic, leaf.p) || !on_conic(lam.conic, leaf.q)) {
      push(LaminationViolation::Kind::endpoint_off_conic, i);
      usable[static_cast<std::size_t>(i)] = false;
      continue;
    }
    if (proj_equal(leaf.p, leaf.q)) {
      push(LaminationViolation::Kind::degenerate_leaf, i);
      usable[static_cast<std::size_t>(i)] = false;
    }
  }

  std::vector<double> ap(static_cast<std::size_t>(n)), aq(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (!usable[static_cast<std::size_t>(i)]) continue;
    ap[static_cast<std::size_t>(i)] =
        mod_angle(disk_angle(to_disk, lam.leaves[static_cast<std::size_t>(i)].p));
    aq[static_cast<std::size_t>(i)] =
        mod_angle(disk_angle(to_disk, lam.leaves[static_cast<std::size_t>(i)].q));
  }

  constexpr double kAngTol = 1e-9;
  for (int i = 0; i < n; ++i) {
    if (!usable[static_cast<std::size_t>(i)]) continue;
    for (int j = i + 1; j < n; ++j) {
      if (!usable[static_cast<std::size_t>(j)]) continue;
      const double pi_ = ap[static_cast<std::size_t>(i)], qi = aq[static_cast<std::size_t>(i)];
      const double pj = ap[static_cast<std::size_t>(j)], qj = aq[static_cast<std::size_t>(j)];
      if (angular_gap(pi_, pj) <= kAngTol || angular_gap(pi_, qj) <= kAngTol ||
          angular_gap(qi, pj) <= kAngTol || angular_gap(qi, qj) <= kAngTol) {
        push(LaminationViolation::Kind::shared_endpoint, i, j);
        continue;
      }
      const double len = mod_angle(qi - pi_);
      const bool in1 = interval_contains(pi_, len, pj, kAngTol);
      const bool in2 = interval_contains(pi_, len, qj, kAngTol);
      if (in1 != in2) push(LaminationViolation::Kind::interleaved, i, j);
    }
  }

  // Basepoint: interior, and off every chord.
  {
    const Vec3 b = apply(to_disk, lam.basepoint).v;
    const double be = b[0] * b[0] + b[1] * b[1] - b[2] * b[2];
    if (!(be < -1e-9)) {
      push(LaminationViolation::Kind::basepoint_not_interior);
    } else {
      const double bx = b[0] / b[2], by = b[1] / b[2];
      for (int i = 0; i < n; ++i) {
        if (!usable[static_cast<std::size_t>(i)]) continue;
        const Vec3 line =
            join(apply(to_disk, lam.leaves[static_cast<std::size_t>(i)].p),
                 apply(to_disk, lam.leaves[static_cast<std::size_t>(i)].q))
                .l;
        const double dist = std::abs(line[0] * bx + line[1] * by + line[2]) /
                            std::hypot(line[0], line[1]);
        if (dist <= 1e-9) push(LaminationViolation::Kind::basepoint_on_leaf, i);
      }
    }
  }

  if (lam.require_chamber) {
    for (int i = 0; i < n; ++i)
      if (!in_weyl_chamber(lam.leaves[static_cast<std::size_t>(i)].weight, true))
        push(LaminationViolation::Kind::weight_outside_chamber, i);
  }
  return rep;
}

RegionTree region_tree(const Lamination& lam) {
  const LaminationReport rep = validate_lamination(lam);
  if (!rep.ok()) fail(Errc::invalid_lamination, rep.violations.front().describe());

  const DiskScene scene = build_disk_scene(lam);
  const int n = static_cast<int>(lam.leaves.size());

  RegionTree tree;
  tree.to_disk = scene.to_disk;

  std::vector<FarArc> fars(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) fars[static_cast<std::size_t>(i)] = far_arc(scene, i);

  // Laminar nesting: parent = smallest far arc strictly containing this one.
  std::vector<int> parent_leaf(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const double mid = fars[static_cast<std::size_t>(i)].start + fars[static_cast<std::size_t>(i)].len / 2.0;
    int best = -1;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const FarArc& fj = fars[static_cast<std::size_t>(j)];
      if (fj.len <= fars[static_cast<std::size_t>(i)].len) continue;
      if (!interval_contains(fj.start, fj.len, mod_angle(mid), 0.0)) continue;
      if (best < 0 || fj.len < fars[static_cast<std::size_t>(best)].len) best = j;
    }
    parent_leaf[static_cast<std::size_t>(i)] = best;
  }

  // Oriented factor per leaf: crossing away from the basepoint applies the
  // bulge when (p, q, basepoint) is positively oriented in the disk, the
  // inverse otherwise. Moving the basepoint across one leaf flips exactly
  // that factor, which re-roots the family by a single conjugation.
  tree.leaf_factors.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Collineation b = bulge_transform(lam.conic, lam.leaves[static_cast<std::size_t>(i)]);
    tree.leaf_factors.push_back(scene.orient[static_cast<std::size_t>(i)] > 0 ? b : b.inverse());
  }

  // Region transforms compose outermost-first along the nesting paths.
  std::vector<std::optional<Collineation>> leaf_transform(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> leaf_crossings(static_cast<std::size_t>(n));
  auto resolve = [&](auto&& self, int i) -> void {
    if (leaf_transform[static_cast<std::size_t>(i)]) return;
    const int pa = parent_leaf[static_cast<std::size_t>(i)];
    if (pa < 0) {
      leaf_crossings[static_cast<std::size_t>(i)] = {i};
      leaf_transform[static_cast<std::size_t>(i)] = tree.leaf_factors[static_cast<std::size_t>(i)];
      return;
    }
    self(self, pa);
    leaf_crossings[static_cast<std::size_t>(i)] = leaf_crossings[static_cast<std::size_t>(pa)];
    leaf_crossings[static_cast<std::size_t>(i)].push_back(i);
    leaf_transform[static_cast<std::size_t>(i)] =
        *leaf_transform[static_cast<std::size_t>(pa)] * tree.leaf_factors[static_cast<std::size_t>(i)];
  };
  for (int i = 0; i < n; ++i) resolve(resolve, i);

  std::vector<std::vector<int>> children(static_cast<std::size_t>(n));
  std::vector<int> top;
  for (int i = 0; i < n; ++i) {
    if (parent_leaf[static_cast<std::size_t>(i)] < 0)
      top.push_back(i);
    else
      children[static_cast<std::size_t>(parent_leaf[static_cast<std::size_t>(i)])].push_back(i);
  }
  auto by_start = [&fars](int a, int b) {
    return fars[static_cast<std::size_t>(a)].start < fars[static_cast<std::size_t>(b)].start;
  };
  std::sort(top.begin(), top.end(), by_start);
  for (auto& ch : children) std::sort(ch.begin(), ch.end(), by_start);

  auto endpoint_at_start = [&](int i) {
    const Leaf& leaf = lam.leaves[static_cast<std::size_t>(i)];
    return fars[static_cast<std::size_t>(i)].from_is_p ? leaf.p : leaf.q;
  };
  auto endpoint_at_end = [&](int i) {
    const Leaf& leaf = lam.leaves[static_cast<std::size_t>(i)];
    return fars[static_cast<std::size_t>(i)].from_is_p ? leaf.q : leaf.p;
  };

  // Base region.
  Region base;
  base.transform = Collineation::identity();
  if (n == 0) {
    RegionArc full;
    full.theta_from = 0;
    full.theta_to = kTwoPi;
    full.from = disk_point(scene.from_disk, 0.0);
    full.to = full.from;
    full.full_circle = true;
    base.arcs.push_back(full);
  } else {
    const std::size_t k = top.size();
    for (std::size_t c = 0; c < k; ++c) {
      const int cur = top[c];
      const int next = top[(c + 1) % k];
      const FarArc& fc = fars[static_cast<std::size_t>(cur)];
      const FarArc& fn = fars[static_cast<std::size_t>(next)];
      RegionArc arc;
      arc.theta_from = fc.start + fc.len;
      double to = fn.start;
      while (to < arc.theta_from - 1e-15) to += kTwoPi;
      arc.theta_to = to;
      arc.from = endpoint_at_end(cur);
      arc.to = endpoint_at_start(next);
      base.arcs.push_back(arc);
    }
  }
  tree.regions.push_back(base);

  for (int i = 0; i < n; ++i) {
    Region r;
    r.leaf = i;
    const int pa = parent_leaf[static_cast<std::size_t>(i)];
    r.parent = pa < 0 ? 0 : pa + 1;
    r.crossings = leaf_crossings[static_cast<std::size_t>(i)];
    r.transform = *leaf_transform[static_cast<std::size_t>(i)];
    const FarArc& fi = fars[static_cast<std::size_t>(i)];
    double cursor = fi.start;
    ProjPoint cursor_point = endpoint_at_start(i);
    for (int c : children[static_cast<std::size_t>(i)]) {
      const FarArc& fc = fars[static_cast<std::size_t>(c)];
      double cstart = fc.start;
      while (cstart < cursor - 1e-15) cstart += kTwoPi;
      RegionArc arc;
      arc.theta_from = cursor;
      arc.theta_to = cstart;
      arc.from = cursor_point;
      arc.to = endpoint_at_start(c);
      r.arcs.push_back(arc);
      cursor = cstart + fc.len;
      cursor_point = endpoint_at_end(c);
    }
    RegionArc last;
    last.theta_from = cursor;
    double end = fi.start + fi.len;
    while (end < cursor - 1e-15) end += kTwoPi;
    last.theta_to = end;
    last.from = cursor_point;
    last.to = endpoint_at_end(i);
    r.arcs.push_back(last);
    tree.regions.push_back(r);
  }
  return tree;
}

ConicArc ConicArc::direct(const Conic& q, const ProjPoint& start, const ProjPoint& end,
                          const ProjPoint& witness, bool full_circle) {
  ConicArc arc;
  arc.conic = q;
  arc.start = start;
  arc.end = end;
  arc.witness = witness;
  arc.transform = Collineation::identity();
  arc.base_conic = q;
  arc.base_start = start;
  arc.base_end = end;
  arc.base_witness = witness;
  arc.full_circle = full_circle;
  return arc;
}

PiecewiseConic deformed_boundary(const Lamination& lam) {
  const RegionTree tree = region_tree(lam);
  const Collineation from_disk = tree.to_disk.inverse();

  struct Keyed {
    double key;
    ConicArc arc;
  };
  std::vector<Keyed> keyed;
  for (const Region& r : tree.regions) {
    const Conic image = apply_to_conic(r.transform, lam.conic);
    for (const RegionArc& a : r.arcs) {
      ConicArc out;
      out.conic = image;
      out.full_circle = a.full_circle;
      out.transform = r.transform;
      out.base_conic = lam.conic;
      out.base_start = a.from;
      out.base_end = a.to;
      out.start = apply(r.transform, a.from);
      out.end = apply(r.transform, a.to);
      const double mid = a.full_circle ? a.theta_from + kTwoPi / 3.0
                                       : (a.theta_from + a.theta_to) / 2.0;
      out.base_witness = disk_point(from_disk, mid);
      out.witness = apply(r.transform, out.base_witness);
      keyed.push_back({mod_angle(a.theta_from), out});
    }
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) { return a.key < b.key; });

  PiecewiseConic curve;
  curve.closed = true;
  curve.arcs.reserve(keyed.size());
  for (const Keyed& k : keyed) curve.arcs.push_back(k.arc);
  return curve;
}

std::vector<ProjPoint> sample_curve(const PiecewiseConic& curve, int per_arc) {
  if (per_arc < 2) fail(Errc::invalid_argument, "sample_curve needs per_arc >= 2");
  std::vector<ProjPoint> out;
  for (const ConicArc& arc : curve.arcs) {
    if (arc.full_circle) {
      const Collineation t = conic_to_disk(arc.base_conic);
      const Collineation back = t.inverse();
      const double theta0 = disk_angle(t, arc.base_start);
      for (int k = 0; k < per_arc; ++k)
        out.push_back(apply(arc.transform, disk_point(back, theta0 + kTwoPi * k / per_arc)));
      continue;
    }
    const auto pts =
        sample_conic_arc(arc.base_conic, arc.base_start, arc.base_end, arc.base_witness, per_arc + 1);
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) out.push_back(apply(arc.transform, pts[k]));
  }
  return out;
}

std::vector<Vec2> sample_curve_chart(const PiecewiseConic& curve, int per_arc,
                                     const AffineChart& chart) {
  const auto pts = sample_curve(curve, per_arc);
  std::vector<Vec2> out;
  out.reserve(pts.size());
  for (const ProjPoint& p : pts) out.push_back(chart_project(chart, p));
  return out;
}

Lamination orbit_lamination(const Collineation& g, const Conic& conic, const Leaf& seed,
                            const ProjPoint& basepoint, int n) {
  if (n < 0) fail(Errc::invalid_argument, "orbit_lamination needs n >= 0");
  if (classify(g).tag != ClassifyTag::positive_hyperbolic)
    fail(Errc::not_positive_hyperbolic, "orbit_lamination");
  if (!conic_equal(apply_to_conic(g, conic), conic, 1e-9))
    fail(Errc::not_conic_preserving, "orbit generator must preserve the base conic");

  Lamination lam;
  lam.conic = conic;
  lam.basepoint = basepoint;
  const Collineation ginv = g.inverse();
  std::vector<Leaf> forward, backward;
  Leaf cur = seed;
  for (int k = 1; k <= n; ++k) {
    cur = Leaf{apply(g, cur.p), apply(g, cur.q), seed.weight};
    forward.push_back(cur);
  }
  cur = seed;
  for (int k = 1; k <= n; ++k) {
    cur = Leaf{apply(ginv, cur.p), apply(ginv, cur.q), seed.weight};
    backward.push_back(cur);
  }
  for (auto it = backward.rbegin(); it != backward.rend(); ++it) lam.leaves.push_back(*it);
  lam.leaves.push_back(seed);
  for (const Leaf& l : forward) lam.leaves.push_back(l);

  const LaminationReport rep = validate_lamination(lam);
  if (!rep.ok()) fail(Errc::orbit_self_crossing, rep.violations.front().describe());
  return lam;
}

Collineation deform_cyclic_holonomy(const Conic& q, const Collineation& g, const Leaf& leaf) {
  if (classify(g).tag != ClassifyTag::positive_hyperbolic)
    fail(Errc::not_positive_hyperbolic, "deform_cyclic_holonomy");
  const EigenBasis eb = eigenbasis(g);
  if (!proj_equal(eb.attracting, leaf.p, 1e-8) || !proj_equal(eb.repelling, leaf.q, 1e-8))
    fail(Errc::axis_mismatch, "leaf endpoints must be the attracting/repelling fixed points");
  return g * bulge_transform(q, leaf);
}

double hausdorff_distance(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
  if (a.size() < 16 || b.size() < 16)
    fail(Errc::too_few_samples, "hausdorff_distance needs >= 16 samples per curve");
  auto directed = [](const std::vector<Vec2>& x, const std::vector<Vec2>& y) {
    double worst = 0;
    for (const Vec2& p : x) {
      double best = std::numeric_limits<double>::infinity();
      for (const Vec2& q : y) {
        const double dx = p.x - q.x, dy = p.y - q.y;
        best = std::min(best, dx * dx + dy * dy);
      }
      worst = std::max(worst, best);
    }
    return std::sqrt(worst);
  };
  return std::max(directed(a, b), directed(b, a));
}

namespace {

double line_chart_angle(const ProjLine& l, const AffineChart& chart) {
  const Vec3 inf_point = cross(l.l, chart.c);
  const double dx = dot(chart.b1, inf_point);
  const double dy = dot(chart.b2, inf_point);
  if (std::abs(dx) <= 1e-300 && std::abs(dy) <= 1e-300)
    fail(Errc::numeric_failure, "line direction undefined in this chart");
  double a = std::atan2(dy, dx);
  if (a < 0) a += M_PI;
  if (a >= M_PI) a -= M_PI;
  return a;
}

}  // namespace

namespace {

// Tangent at an arc endpoint, computed on the base conic and pushed through
// the arc transform (stable even when the image conic is ill-conditioned).
ProjLine arc_end_tangent(const ConicArc& arc, bool at_start) {
  const ProjPoint& base_pt = at_start ? arc.base_start : arc.base_end;
  return apply_to_line(arc.transform, tangent_line(arc.base_conic, base_pt));
}

}  // namespace

double check_c1_junctions(const PiecewiseConic& curve, const AffineChart& chart) {
  const std::size_t n = curve.arcs.size();
  if (n == 0) return 0;
  double worst = 0;
  const std::size_t last = curve.closed ? n : n - 1;
  for (std::size_t i = 0; i < last; ++i) {
    const ConicArc& a = curve.arcs[i];
    const ConicArc& b = curve.arcs[(i + 1) % n];
    const double ta = line_chart_angle(arc_end_tangent(a, false), chart);
    const double tb = line_chart_angle(arc_end_tangent(b, true), chart);
    double d = std::abs(ta - tb);
    d = std::min(d, M_PI - d);
    worst = std::max(worst, d);
  }
  return worst;
}

ConvexityReport check_convexity(const PiecewiseConic& curve, int samples, const AffineChart& chart) {
  if (samples < 64) fail(Errc::invalid_argument, "check_convexity needs samples >= 64");
  const int n_arcs = std::max<int>(1, static_cast<int>(curve.arcs.size()));
  const int per_arc = std::max(4, (samples + n_arcs - 1) / n_arcs);
  std::vector<Vec2> pts = sample_curve_chart(curve, per_arc, chart);

  std::vector<Vec2> poly;
  for (const Vec2& p : pts) {
    if (!poly.empty()) {
      const double dx = p.x - poly.back().x, dy = p.y - poly.back().y;
      if (std::abs(dx) <= 1e-12 && std::abs(dy) <= 1e-12) continue;
    }
    poly.push_back(p);
  }
  while (poly.size() > 1 && std::abs(poly.front().x - poly.back().x) <= 1e-12 &&
         std::abs(poly.front().y - poly.back().y) <= 1e-12)
    poly.pop_back();

  ConvexityReport rep;
  rep.chart = chart.describe();
  if (poly.size() < 3) return rep;

  int pos = 0, neg = 0;
  double turning = 0;
  const std::size_t m = poly.size();
  for (std::size_t k = 0; k < m; ++k) {
    const Vec2& p0 = poly[k];
    const Vec2& p1 = poly[(k + 1) % m];
    const Vec2& p2 = poly[(k + 2) % m];
    const double ux = p1.x - p0.x, uy = p1.y - p0.y;
    const double vx = p2.x - p1.x, vy = p2.y - p1.y;
    const double cr = ux * vy - uy * vx;
    if (cr > 1e-10) ++pos;
    else if (cr < -1e-10) ++neg;
    turning += std::atan2(cr, ux * vx + uy * vy);
  }
  rep.winding = static_cast<int>(std::lround(turning / kTwoPi));
  rep.sign_violations = std::min(pos, neg);
  rep.convex = rep.sign_violations == 0 && std::abs(rep.winding) == 1;
  return rep;
}

}  // namespace rp2
