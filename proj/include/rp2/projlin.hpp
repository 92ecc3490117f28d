#pragma once

#include <string>
#include <vector>

#include "rp2/error.hpp"
#include "rp2/linalg.hpp"

namespace rp2 {

/// Absolute tolerance for projective comparisons on normalized representatives.
inline constexpr double kProjTol = 1e-9;

/// Point of RP^2 in homogeneous coordinates, stored in canonical form:
/// the largest-magnitude coordinate has absolute value 1 and the first
/// nonzero coordinate is positive.
struct ProjPoint {
  Vec3 v{};

  static ProjPoint from(const Vec3& raw);
};

/// Line of RP^2 in dual homogeneous coordinates, same canonical form.
struct ProjLine {
  Vec3 l{};

  static ProjLine from(const Vec3& raw);
};

bool proj_equal(const ProjPoint& p, const ProjPoint& q, double tol = kProjTol);
bool proj_equal(const ProjLine& a, const ProjLine& b, double tol = kProjTol);
bool incident(const ProjLine& l, const ProjPoint& p, double tol = kProjTol);

ProjLine join(const ProjPoint& p, const ProjPoint& q);
ProjPoint meet(const ProjLine& l, const ProjLine& m);

/// Projective transformation of RP^2, stored as the unique representative
/// with determinant 1. Matrices with negative determinant are negated first
/// (same collineation).
struct Collineation {
  Mat3 m;

  static Collineation from(const Mat3& raw);
  static Collineation identity() { return Collineation{Mat3::identity()}; }

  Collineation operator*(const Collineation& o) const;
  Collineation inverse() const;
};

ProjPoint apply(const Collineation& g, const ProjPoint& p);
ProjLine apply_to_line(const Collineation& g, const ProjLine& l);

/// Conic {v : v^T q v = 0}, q symmetric, normalized so the largest-magnitude
/// entry is +-1 and the first nonzero entry in row-major order is positive.
struct Conic {
  Mat3 q;

  static Conic from(const Mat3& raw);
  /// x^2 + y^2 - z^2 = 0.
  static Conic unit_circle();
  /// y^2 - xz = 0; normal form used by chord frames and arc sampling.
  static Conic standard_y2_xz();

  bool nondegenerate(double tol = 1e-12) const;
  double eval(const ProjPoint& p) const;
};

bool conic_equal(const Conic& a, const Conic& b, double tol = kProjTol);
bool on_conic(const Conic& q, const ProjPoint& p, double tol = kProjTol);

Conic apply_to_conic(const Collineation& g, const Conic& q);

enum class ClassifyTag { positive_hyperbolic, complex_pair, repeated_eigenvalues, non_positive_root };

/// Outcome of classify(); (s, t) are the top two log-eigenvalues when
/// positive hyperbolic, so s > t > -s-t.
struct Classification {
  ClassifyTag tag;
  double s = 0;
  double t = 0;
};

const char* classify_tag_name(ClassifyTag t);

Classification classify(const Collineation& g);

/// Fixed points of a positive hyperbolic collineation, ordered by
/// decreasing eigenvalue.
struct EigenBasis {
  ProjPoint attracting, middle, repelling;
  Vec3 eigenvalues{};
};

EigenBasis eigenbasis(const Collineation& g);

ProjLine tangent_line(const Conic& q, const ProjPoint& p);
ProjPoint pole(const Conic& q, const ProjLine& l);

/// Affine chart: covector c plus two basis covectors; a point p with
/// <c,p> != 0 projects to (<b1,v>, <b2,v>) where v = p / <c,p>.
struct AffineChart {
  Vec3 c{};
  Vec3 b1{};
  Vec3 b2{};

  static AffineChart z_plane() { return {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}; }
  static AffineChart sum_plane() { return {{1, 1, 1}, {1, 0, 0}, {0, 1, 0}}; }
  /// Chart with the default basis (drop the third coordinate after scaling).
  static AffineChart from_covector(const Vec3& c) { return {c, {1, 0, 0}, {0, 1, 0}}; }

  std::string describe() const;
};

struct Vec2 {
  double x = 0;
  double y = 0;
};

Vec2 chart_project(const AffineChart& chart, const ProjPoint& p);

/// Basis M with columns (p, pole(Q, join(p,q)), q), column scales fixed so
/// M^T q M is proportional to the matrix of y^2 - xz with the first column
/// kept in canonical point form. M maps the standard conic onto Q.
Mat3 conic_chord_frame(const Conic& q, const ProjPoint& p, const ProjPoint& q_pt);

/// n points on Q from p to q along the arc containing side_witness, via the
/// rational parameterization of the chord frame.
std::vector<ProjPoint> sample_conic_arc(const Conic& q, const ProjPoint& p, const ProjPoint& q_pt,
                                        const ProjPoint& side_witness, int n);

}  // namespace rp2
