#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace rp2 {

using Vec3 = std::array<double, 3>;

inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline Vec3 add(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Vec3 scale(const Vec3& a, double c) { return {c * a[0], c * a[1], c * a[2]}; }
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline double max_abs(const Vec3& a) {
  return std::max(std::abs(a[0]), std::max(std::abs(a[1]), std::abs(a[2])));
}

/// Dense 3x3 real matrix, row-major.
struct Mat3 {
  std::array<double, 9> a{};

  double& operator()(int r, int c) { return a[static_cast<std::size_t>(3 * r + c)]; }
  double operator()(int r, int c) const { return a[static_cast<std::size_t>(3 * r + c)]; }

  static Mat3 identity() { return Mat3{{1, 0, 0, 0, 1, 0, 0, 0, 1}}; }
  static Mat3 diagonal(double d0, double d1, double d2) {
    return Mat3{{d0, 0, 0, 0, d1, 0, 0, 0, d2}};
  }
  static Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
    return Mat3{{c0[0], c1[0], c2[0], c0[1], c1[1], c2[1], c0[2], c1[2], c2[2]}};
  }

  Vec3 row(int r) const { return {(*this)(r, 0), (*this)(r, 1), (*this)(r, 2)}; }
  Vec3 col(int c) const { return {(*this)(0, c), (*this)(1, c), (*this)(2, c)}; }
};

Mat3 operator*(const Mat3& x, const Mat3& y);
Mat3 operator+(const Mat3& x, const Mat3& y);
Mat3 operator-(const Mat3& x, const Mat3& y);
Mat3 operator*(double c, const Mat3& x);
Vec3 mul(const Mat3& m, const Vec3& v);

Mat3 transpose(const Mat3& m);
double trace(const Mat3& m);
double det(const Mat3& m);
/// Transposed cofactor matrix; adj(m) * m = det(m) * I.
Mat3 adjugate(const Mat3& m);
double max_abs(const Mat3& m);
double frobenius(const Mat3& m);

/// Real roots of x^3 + b x^2 + c x + d, each polished by Newton steps.
/// n_real is 1 or 3; roots sorted in decreasing order. When the depressed
/// discriminant is near zero the three-real branch is taken so that nearly
/// repeated roots come back as three close values. near_repeated is set when
/// the discriminant sits at its floating-point noise floor, i.e. the data is
/// consistent with a genuinely repeated root that the computed root gaps
/// (accurate only to ~sqrt(eps) there) cannot resolve.
struct CubicRoots {
  int n_real = 0;
  std::array<double, 3> r{};
  bool near_repeated = false;
};
CubicRoots solve_monic_cubic(double b, double c, double d);

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
/// Columns of vectors are orthonormal; m = V * diag(values) * V^T.
struct SymmetricEigen {
  Vec3 values{};
  Mat3 vectors;
};
SymmetricEigen eigen_symmetric(const Mat3& m);

}  // namespace rp2
