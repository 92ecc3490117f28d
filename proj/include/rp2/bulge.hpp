#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rp2/projlin.hpp"
#include "rp2/rootsys.hpp"

namespace rp2 {

/// Chord of the base conic with a Cartan-valued transverse weight. The
/// weight acts as exp(diag(s, t, -s-t)) in the chord frame (p, pole, q).
struct Leaf {
  ProjPoint p, q;
  CartanElement weight;
};

/// Finite disjoint chord system on a conic with a marked interior basepoint.
struct Lamination {
  Conic conic;
  std::vector<Leaf> leaves;
  ProjPoint basepoint;
  bool require_chamber = false;
};

/// Chord frame as a collineation: maps the standard conic y^2 = xz onto Q
/// with columns along (p, pole, q).
Collineation leaf_basis(const Conic& q, const ProjPoint& p, const ProjPoint& q_pt);

/// M exp(diag(s,t,-s-t)) M^{-1} for the leaf's chord frame M; fixes both
/// endpoints. The det-1 form of the classical one-parameter bulge
/// diag(1, e^u, 1) is the weight a(-u/3, 2u/3).
Collineation bulge_transform(const Conic& q, const Leaf& leaf);

/// Direction (normalized to s = 1) whose bulge preserves the conic: the
/// earthquake direction of the leaf.
CartanElement conic_stabilizer_direction(const Conic& q, const Leaf& leaf);

struct LaminationViolation {
  enum class Kind {
    conic_degenerate,
    conic_not_real,
    endpoint_off_conic,
    degenerate_leaf,
    shared_endpoint,
    interleaved,
    basepoint_not_interior,
    basepoint_on_leaf,
    weight_outside_chamber,
  };
  Kind kind;
  int leaf_a = -1;
  int leaf_b = -1;

  std::string describe() const;
};

struct LaminationReport {
  std::vector<LaminationViolation> violations;
  bool ok() const { return violations.empty(); }
};

LaminationReport validate_lamination(const Lamination& lam);

/// One circle arc of a region boundary, in disk-model angles; the stored
/// points are the original leaf endpoints in base coordinates.
struct RegionArc {
  double theta_from = 0;
  double theta_to = 0;  // ccw from theta_from
  ProjPoint from, to;
  bool full_circle = false;
};

struct Region {
  int leaf = -1;    // leaf crossed to enter this region; -1 for the base region
  int parent = -1;  // region index
  std::vector<int> crossings;  // leaf indices on the path from the base region
  Collineation transform;
  std::vector<RegionArc> arcs;
};

/// Complementary regions of the chords, rooted at the region containing the
/// basepoint. Adjacent regions differ by one oriented bulge factor.
struct RegionTree {
  std::vector<Region> regions;  // index 0 is the base region
  Collineation to_disk;         // maps the base conic to the unit circle
  std::vector<Collineation> leaf_factors;  // oriented factor per leaf
};

RegionTree region_tree(const Lamination& lam);

/// Arc of a conic delimited by two points, with a witness selecting the
/// side. Arcs produced by deformed_boundary also carry their provenance (a
/// base arc and the region transform mapping it here); sampling and tangent
/// computations run on the base data and map through the transform, which
/// keeps deep-orbit arcs numerically sound even when the image conic is
/// nearly degenerate after normalization.
struct ConicArc {
  Conic conic;
  ProjPoint start, end, witness;
  Collineation transform;  // maps the base arc onto this arc
  Conic base_conic;
  ProjPoint base_start, base_end, base_witness;
  bool full_circle = false;

  /// Arc given directly by its own conic and points (identity provenance).
  static ConicArc direct(const Conic& q, const ProjPoint& start, const ProjPoint& end,
                         const ProjPoint& witness, bool full_circle = false);
};

struct PiecewiseConic {
  std::vector<ConicArc> arcs;  // cyclic order; consecutive arcs share endpoints
  bool closed = false;
};

/// The deformed boundary: each region's portion of the base conic mapped by
/// the region transform. Junctions are the transformed leaf endpoints.
PiecewiseConic deformed_boundary(const Lamination& lam);

/// Sampled points along the curve, per_arc per arc, junctions not repeated.
std::vector<ProjPoint> sample_curve(const PiecewiseConic& curve, int per_arc);
std::vector<Vec2> sample_curve_chart(const PiecewiseConic& curve, int per_arc,
                                     const AffineChart& chart);

/// Leaves g^k(seed) for |k| <= n, all with the seed's weight.
Lamination orbit_lamination(const Collineation& g, const Conic& conic, const Leaf& seed,
                            const ProjPoint& basepoint, int n);

/// g composed with the bulge along its own axis; shifts the log-eigenvalues
/// of g by exactly the leaf weight.
Collineation deform_cyclic_holonomy(const Conic& q, const Collineation& g, const Leaf& leaf);

/// Symmetric max-min distance between two sampled curves (>= 16 samples each).
double hausdorff_distance(const std::vector<Vec2>& a, const std::vector<Vec2>& b);

/// Largest angular mismatch (radians, mod pi) between the tangent lines of
/// adjacent arcs at their junctions.
double check_c1_junctions(const PiecewiseConic& curve,
                          const AffineChart& chart = AffineChart::z_plane());

struct ConvexityReport {
  bool convex = false;
  int winding = 0;
  int sign_violations = 0;
  std::string chart;
};

ConvexityReport check_convexity(const PiecewiseConic& curve, int samples,
                                const AffineChart& chart = AffineChart::z_plane());

/// Collineation T with apply_to_conic(T, q) = unit circle. Requires a
/// nondegenerate conic with signature (2,1) up to sign.
Collineation conic_to_disk(const Conic& q);

}  // namespace rp2
