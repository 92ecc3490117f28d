#include "rp2/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace rp2 {

Mat3 operator*(const Mat3& x, const Mat3& y) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0;
      for (int k = 0; k < 3; ++k) s += x(i, k) * y(k, j);
      r(i, j) = s;
    }
  return r;
}

Mat3 operator+(const Mat3& x, const Mat3& y) {
  Mat3 r;
  for (int i = 0; i < 9; ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

Mat3 operator-(const Mat3& x, const Mat3& y) {
  Mat3 r;
  for (int i = 0; i < 9; ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

Mat3 operator*(double c, const Mat3& x) {
  Mat3 r;
  for (int i = 0; i < 9; ++i) r.a[i] = c * x.a[i];
  return r;
}

Vec3 mul(const Mat3& m, const Vec3& v) {
  return {dot(m.row(0), v), dot(m.row(1), v), dot(m.row(2), v)};
}

Mat3 transpose(const Mat3& m) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = m(j, i);
  return r;
}

double trace(const Mat3& m) { return m(0, 0) + m(1, 1) + m(2, 2); }

double det(const Mat3& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

Mat3 adjugate(const Mat3& m) {
  Mat3 r;
  r(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
  r(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
  r(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
  r(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
  r(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
  r(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
  r(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
  r(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
  r(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  return r;
}

double max_abs(const Mat3& m) {
  double r = 0;
  for (double v : m.a) r = std::max(r, std::abs(v));
  return r;
}

double frobenius(const Mat3& m) {
  double s = 0;
  for (double v : m.a) s += v * v;
  return std::sqrt(s);
}

namespace {

double polish_root(double x, double b, double c, double d) {
  for (int it = 0; it < 2; ++it) {
    double f = ((x + b) * x + c) * x + d;
    double df = (3 * x + 2 * b) * x + c;
    if (std::abs(df) < 1e-300) break;
    double step = f / df;
    if (!std::isfinite(step)) break;
    x -= step;
  }
  return x;
}

}  // namespace

CubicRoots solve_monic_cubic(double b, double c, double d) {
  // Depressed form y^3 + p y + q with x = y - b/3.
  const double shift = b / 3.0;
  const double p = c - b * b / 3.0;
  const double q = (2.0 * b * b * b - 9.0 * b * c) / 27.0 + d;
  const double disc = -4.0 * p * p * p - 27.0 * q * q;
  const double scale6 = std::max({std::abs(p * p * p), q * q, 1e-300});

  // Noise floor of the discriminant: p and q inherit absolute rounding error
  // from the cancellations in their own formulas, amplified by d(disc)/dp and
  // d(disc)/dq.
  constexpr double eps = 2.3e-16;
  const double p_err = eps * std::max({std::abs(c), b * b / 3.0, 1e-300});
  const double q_err =
      eps * std::max({std::abs(b * b * b) / 13.0, std::abs(b * c) / 3.0, std::abs(d), 1e-300});
  const double disc_noise =
      12.0 * p * p * p_err + 54.0 * std::abs(q) * q_err + eps * (4.0 * std::abs(p * p * p) + 27.0 * q * q);

  CubicRoots out;
  out.near_repeated = std::abs(disc) <= 256.0 * disc_noise;
  if (disc > -1e-11 * scale6 && p < 0) {
    // Three real roots (possibly nearly repeated): trigonometric form.
    const double m = 2.0 * std::sqrt(-p / 3.0);
    double arg = 3.0 * q / (p * m);
    arg = std::clamp(arg, -1.0, 1.0);
    const double theta = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k) {
      double y = m * std::cos(theta - 2.0 * M_PI * k / 3.0);
      out.r[static_cast<std::size_t>(k)] = polish_root(y - shift, b, c, d);
    }
    out.n_real = 3;
    std::sort(out.r.begin(), out.r.end(), std::greater<double>());
    return out;
  }
  // One guaranteed real root by Cardano; nearly repeated pairs fall out of
  // the quadratic deflation below.
  const double half_q = q / 2.0;
  const double rad = half_q * half_q + p * p * p / 27.0;
  double y0;
  if (rad >= 0) {
    const double s = std::sqrt(rad);
    const double u = std::cbrt(-half_q + s);
    const double v = std::cbrt(-half_q - s);
    y0 = u + v;
  } else {
    // Should have been caught by the trig branch; fall back to it.
    const double m = 2.0 * std::sqrt(-p / 3.0);
    const double theta = std::acos(std::clamp(3.0 * q / (p * m), -1.0, 1.0)) / 3.0;
    y0 = m * std::cos(theta);
  }
  const double x0 = polish_root(y0 - shift, b, c, d);
  // Deflate: x^3+bx^2+cx+d = (x - x0)(x^2 + beta x + gamma).
  const double beta = b + x0;
  const double gamma = c + x0 * beta;
  const double dq = beta * beta - 4.0 * gamma;
  const double qscale = std::max({beta * beta, std::abs(gamma), 1e-300});
  if (dq > 1e-13 * qscale) {
    const double s = std::sqrt(dq);
    out.n_real = 3;
    out.r = {x0, (-beta + s) / 2.0, (-beta - s) / 2.0};
    for (auto& x : out.r) x = polish_root(x, b, c, d);
    std::sort(out.r.begin(), out.r.end(), std::greater<double>());
  } else if (dq >= -1e-13 * qscale) {
    out.n_real = 3;
    out.r = {x0, -beta / 2.0, -beta / 2.0};
    std::sort(out.r.begin(), out.r.end(), std::greater<double>());
  } else {
    out.n_real = 1;
    out.r = {x0, 0, 0};
  }
  return out;
}

SymmetricEigen eigen_symmetric(const Mat3& m) {
  Mat3 a = m;
  Mat3 v = Mat3::identity();
  const double eps = 1e-15 * std::max(1.0, max_abs(m));
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = std::abs(a(0, 1)) + std::abs(a(0, 2)) + std::abs(a(1, 2));
    if (off <= eps) break;
    for (int p = 0; p < 2; ++p)
      for (int q = p + 1; q < 3; ++q) {
        if (std::abs(a(p, q)) <= eps / 8) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double cth = 1.0 / std::sqrt(t * t + 1.0);
        const double sth = t * cth;
        for (int k = 0; k < 3; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = cth * akp - sth * akq;
          a(k, q) = sth * akp + cth * akq;
        }
        for (int k = 0; k < 3; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = cth * apk - sth * aqk;
          a(q, k) = sth * apk + cth * aqk;
        }
        for (int k = 0; k < 3; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = cth * vkp - sth * vkq;
          v(k, q) = sth * vkp + cth * vkq;
        }
      }
  }
  SymmetricEigen out;
  out.values = {a(0, 0), a(1, 1), a(2, 2)};
  out.vectors = v;
  return out;
}

}  // namespace rp2
