#include "rp2/projlin.hpp"

#include <algorithm>
#include <cmath>

namespace rp2 {

namespace {

// Canonical representative: divide by the largest-magnitude entry, then flip
// the sign so the first nonzero entry is positive.
Vec3 canonicalize(const Vec3& raw, Errc zero_code, const char* what) {
  const double m = max_abs(raw);
  if (m <= 1e-300) fail(zero_code, what);
  Vec3 v = scale(raw, 1.0 / m);
  for (int i = 0; i < 3; ++i) {
    if (v[i] != 0.0) {
      if (v[i] < 0.0) v = scale(v, -1.0);
      break;
    }
  }
  return v;
}

bool minors_vanish(const Vec3& a, const Vec3& b, double tol) {
  return std::abs(a[0] * b[1] - a[1] * b[0]) <= tol && std::abs(a[0] * b[2] - a[2] * b[0]) <= tol &&
         std::abs(a[1] * b[2] - a[2] * b[1]) <= tol;
}

}  // namespace

ProjPoint ProjPoint::from(const Vec3& raw) {
  return ProjPoint{canonicalize(raw, Errc::zero_vector, "point coordinates all below 1e-300")};
}

ProjLine ProjLine::from(const Vec3& raw) {
  return ProjLine{canonicalize(raw, Errc::zero_vector, "line coefficients all below 1e-300")};
}

bool proj_equal(const ProjPoint& p, const ProjPoint& q, double tol) {
  return minors_vanish(p.v, q.v, tol);
}

bool proj_equal(const ProjLine& a, const ProjLine& b, double tol) {
  return minors_vanish(a.l, b.l, tol);
}

bool incident(const ProjLine& l, const ProjPoint& p, double tol) {
  return std::abs(dot(l.l, p.v)) <= tol;
}

ProjLine join(const ProjPoint& p, const ProjPoint& q) {
  if (proj_equal(p, q)) fail(Errc::coincident_arguments, "join of projectively equal points");
  return ProjLine::from(cross(p.v, q.v));
}

ProjPoint meet(const ProjLine& l, const ProjLine& m) {
  if (proj_equal(l, m)) fail(Errc::coincident_arguments, "meet of projectively equal lines");
  return ProjPoint::from(cross(l.l, m.l));
}

Collineation Collineation::from(const Mat3& raw) {
  double d = det(raw);
  Mat3 m = raw;
  if (d < 0) {
    m = -1.0 * m;
    d = -d;
  }
  if (!(d > 1e-300) || !std::isfinite(d)) fail(Errc::singular_transform, "determinant underflow");
  const double s = std::cbrt(d);
  return Collineation{(1.0 / s) * m};
}

Collineation Collineation::operator*(const Collineation& o) const {
  return Collineation::from(m * o.m);
}

Collineation Collineation::inverse() const {
  // det(m) == 1, so the adjugate is the inverse.
  return Collineation::from(adjugate(m));
}

ProjPoint apply(const Collineation& g, const ProjPoint& p) { return ProjPoint::from(mul(g.m, p.v)); }

ProjLine apply_to_line(const Collineation& g, const ProjLine& l) {
  // Lines transform by the inverse transpose; with det 1 that is the
  // transpose of the adjugate, i.e. the cofactor matrix.
  return ProjLine::from(mul(transpose(adjugate(g.m)), l.l));
}

Conic Conic::from(const Mat3& raw) {
  Mat3 s;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s(i, j) = (raw(i, j) + raw(j, i)) / 2.0;
  const double m = max_abs(s);
  if (m <= 1e-300) fail(Errc::zero_vector, "conic matrix all below 1e-300");
  s = (1.0 / m) * s;
  for (double e : s.a) {
    if (e != 0.0) {
      if (e < 0.0) s = -1.0 * s;
      break;
    }
  }
  return Conic{s};
}

Conic Conic::unit_circle() { return Conic::from(Mat3::diagonal(1, 1, -1)); }

Conic Conic::standard_y2_xz() { return Conic::from(Mat3{{0, 0, -1, 0, 2, 0, -1, 0, 0}}); }

bool Conic::nondegenerate(double tol) const { return std::abs(det(q)) > tol; }

double Conic::eval(const ProjPoint& p) const { return dot(p.v, mul(q, p.v)); }

bool conic_equal(const Conic& a, const Conic& b, double tol) {
  return max_abs(a.q - b.q) <= tol;
}

bool on_conic(const Conic& q, const ProjPoint& p, double tol) {
  return std::abs(q.eval(p)) <= tol;
}

Conic apply_to_conic(const Collineation& g, const Conic& q) {
  const Mat3 inv = g.inverse().m;
  return Conic::from(transpose(inv) * q.q * inv);
}

const char* classify_tag_name(ClassifyTag t) {
  switch (t) {
    case ClassifyTag::positive_hyperbolic: return "positive_hyperbolic";
    case ClassifyTag::complex_pair: return "complex_pair";
    case ClassifyTag::repeated_eigenvalues: return "repeated_eigenvalues";
    case ClassifyTag::non_positive_root: return "non_positive_root";
  }
  return "?";
}

Classification classify(const Collineation& g) {
  // Characteristic polynomial x^3 - tr x^2 + m2 x - det with det = 1.
  const Mat3& m = g.m;
  const double tr = trace(m);
  const double m2 = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) + m(0, 0) * m(2, 2) -
                    m(0, 2) * m(2, 0) + m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
  const CubicRoots roots = solve_monic_cubic(-tr, m2, -det(m));
  if (roots.n_real < 3) return {ClassifyTag::complex_pair, 0, 0};
  for (double r : roots.r)
    if (!(r > 0)) return {ClassifyTag::non_positive_root, 0, 0};
  // Exact eigenvalue coincidences land at the discriminant's noise floor;
  // the computed roots then spread by ~sqrt(eps) and the gap test alone
  // would accept them.
  if (roots.near_repeated) return {ClassifyTag::repeated_eigenvalues, 0, 0};
  const double l0 = std::log(roots.r[0]);
  const double l1 = std::log(roots.r[1]);
  const double l2 = std::log(roots.r[2]);
  if (l0 - l1 <= 1e-9 || l1 - l2 <= 1e-9) return {ClassifyTag::repeated_eigenvalues, 0, 0};
  return {ClassifyTag::positive_hyperbolic, l0, l1};
}

EigenBasis eigenbasis(const Collineation& g) {
  const Classification c = classify(g);
  if (c.tag != ClassifyTag::positive_hyperbolic)
    fail(Errc::not_positive_hyperbolic, classify_tag_name(c.tag));
  const Vec3 lambda = {std::exp(c.s), std::exp(c.t), std::exp(-c.s - c.t)};
  std::array<ProjPoint, 3> vecs;
  for (int k = 0; k < 3; ++k) {
    const Mat3 b = g.m - Mat3::diagonal(lambda[static_cast<std::size_t>(k)],
                                        lambda[static_cast<std::size_t>(k)],
                                        lambda[static_cast<std::size_t>(k)]);
    // Null vector via the largest cross product of row pairs.
    const Vec3 c01 = cross(b.row(0), b.row(1));
    const Vec3 c02 = cross(b.row(0), b.row(2));
    const Vec3 c12 = cross(b.row(1), b.row(2));
    Vec3 best = c01;
    if (norm(c02) > norm(best)) best = c02;
    if (norm(c12) > norm(best)) best = c12;
    vecs[static_cast<std::size_t>(k)] = ProjPoint::from(best);
  }
  return EigenBasis{vecs[0], vecs[1], vecs[2], lambda};
}

ProjLine tangent_line(const Conic& q, const ProjPoint& p) {
  if (!q.nondegenerate()) fail(Errc::degenerate_conic, "tangent_line");
  if (!on_conic(q, p)) fail(Errc::point_not_on_conic, "tangent_line");
  return ProjLine::from(mul(q.q, p.v));
}

ProjPoint pole(const Conic& q, const ProjLine& l) {
  if (!q.nondegenerate()) fail(Errc::degenerate_conic, "pole");
  // q^{-1} l up to scale; the adjugate avoids the determinant division.
  return ProjPoint::from(mul(adjugate(q.q), l.l));
}

std::string AffineChart::describe() const {
  auto fmt = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return std::string(buf);
  };
  return fmt(c[0]) + "," + fmt(c[1]) + "," + fmt(c[2]);
}

Vec2 chart_project(const AffineChart& chart, const ProjPoint& p) {
  const double d = dot(chart.c, p.v);
  if (std::abs(d) <= 1e-12) fail(Errc::at_infinity, "point on the chart's line at infinity");
  const Vec3 v = scale(p.v, 1.0 / d);
  return {dot(chart.b1, v), dot(chart.b2, v)};
}

Mat3 conic_chord_frame(const Conic& q, const ProjPoint& p, const ProjPoint& q_pt) {
  if (!q.nondegenerate()) fail(Errc::degenerate_conic, "chord frame");
  if (!on_conic(q, p) || !on_conic(q, q_pt))
    fail(Errc::endpoints_not_on_conic, "chord endpoints must satisfy the conic equation");
  if (proj_equal(p, q_pt)) fail(Errc::coincident_arguments, "chord endpoints coincide");
  const ProjPoint r = pole(q, join(p, q_pt));
  Vec3 cp = p.v;
  Vec3 cq = q_pt.v;
  Vec3 cr = r.v;
  const double c = dot(cp, mul(q.q, cq));
  const double d = dot(cr, mul(q.q, cr));
  if (std::abs(d) <= 1e-12 || std::abs(c) <= 1e-12)
    fail(Errc::pole_on_chord, "no real tangency structure for this chord");
  if ((c > 0) == (d > 0)) cq = scale(cq, -1.0);
  const double c_fixed = dot(cp, mul(q.q, cq));
  const double mu = std::sqrt(-2.0 * c_fixed / d);
  cr = scale(cr, mu);
  return Mat3::from_columns(cp, cr, cq);
}

std::vector<ProjPoint> sample_conic_arc(const Conic& q, const ProjPoint& p, const ProjPoint& q_pt,
                                        const ProjPoint& side_witness, int n) {
  if (n < 2) fail(Errc::invalid_argument, "sample_conic_arc needs n >= 2");
  if (!on_conic(q, side_witness)) fail(Errc::endpoints_not_on_conic, "witness not on conic");
  const Mat3 m = conic_chord_frame(q, p, q_pt);
  const Mat3 adj = adjugate(m);
  const Vec3 w = mul(adj, side_witness.v);
  // Parameter of the witness on y^2 = xz; sign selects the arc.
  const double u_num = w[1];
  const double u_ref = std::max(std::abs(w[0]), std::abs(w[2]));
  if (std::abs(u_num) <= 1e-9 * std::max(u_ref, 1e-30))
    fail(Errc::witness_on_wrong_component, "witness coincides with an endpoint");
  const double sgn = (std::abs(w[0]) >= std::abs(w[2]) ? u_num * w[0] : u_num * w[2]) >= 0 ? 1.0 : -1.0;
  std::vector<ProjPoint> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    Vec3 param;
    if (k == 0) {
      param = {1, 0, 0};
    } else if (k == n - 1) {
      param = {0, 0, 1};
    } else {
      const double theta = sgn * (M_PI / 2.0) * static_cast<double>(k) / static_cast<double>(n - 1);
      const double ct = std::cos(theta);
      const double st = std::sin(theta);
      param = {ct * ct, ct * st, st * st};
    }
    out.push_back(ProjPoint::from(mul(m, param)));
  }
  return out;
}

}  // namespace rp2
