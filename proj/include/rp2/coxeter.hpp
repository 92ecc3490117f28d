#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rp2/projlin.hpp"

namespace rp2 {

/// Exact 3x3 integer matrix. Multiplication detects signed-64-bit overflow
/// and raises instead of wrapping.
struct Mat3i {
  std::array<std::int64_t, 9> a{};

  std::int64_t& operator()(int r, int c) { return a[static_cast<std::size_t>(3 * r + c)]; }
  std::int64_t operator()(int r, int c) const { return a[static_cast<std::size_t>(3 * r + c)]; }

  static Mat3i identity() { return Mat3i{{1, 0, 0, 0, 1, 0, 0, 0, 1}}; }

  bool operator==(const Mat3i& o) const { return a == o.a; }

  Mat3 to_double() const;
};

/// Throws Errc::integer_overflow; context names the offending word.
Mat3i checked_mul(const Mat3i& x, const Mat3i& y, const std::string& context);
std::int64_t det(const Mat3i& m);

/// Integer Cartan matrix: diagonal entries 2, off-diagonal entries <= 0.
struct CartanMatrixZ {
  Mat3i c;

  static CartanMatrixZ from(const Mat3i& m);
  /// The matrix generating the (3,3,4)-triangle tiling group.
  static CartanMatrixZ t334() {
    return from(Mat3i{{2, -1, -1, -2, 2, -1, -1, -1, 2}});
  }
};

/// Group element with an exact matrix and a shortest generator word
/// (characters '1'..'3'; ties broken lexicographically).
struct GroupElement {
  Mat3i m;
  std::string word;
};

bool is_even(const GroupElement& g);

/// rho_i = I - E_ii C; each is an exact involution of determinant -1.
std::array<GroupElement, 3> reflections(const CartanMatrixZ& c);

/// Orders of the pairwise products of reflections, capped at 64.
struct ProductOrders {
  static constexpr int infinite = -1;
  int m12 = 0;
  int m23 = 0;
  int m13 = 0;
};
ProductOrders product_orders(const CartanMatrixZ& c);

/// Vertices of the fundamental triangle: v_k = cross of Cartan rows i, j
/// (i, j != k); each is fixed by the two reflections whose rows define it.
std::array<ProjPoint, 3> fundamental_triangle(const CartanMatrixZ& c);

struct Enumeration {
  std::vector<GroupElement> elements;   // BFS order
  std::vector<std::size_t> count_by_length;
};

/// Breadth-first closure of the generators under right multiplication up to
/// word length max_len, deduplicated by exact matrix equality.
Enumeration enumerate(const CartanMatrixZ& c, int max_len);

struct Tiling {
  std::array<ProjPoint, 3> base;
  std::vector<GroupElement> elements;
  std::vector<std::array<ProjPoint, 3>> tile_vertices;  // parallel to elements
};

Tiling tiling(const CartanMatrixZ& c, int max_len);

}  // namespace rp2
