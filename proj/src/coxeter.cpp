#include "rp2/coxeter.hpp"

#include <unordered_map>
#include <unordered_set>

namespace rp2 {

namespace {

std::int64_t checked_add(std::int64_t x, std::int64_t y, const std::string& context) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) fail(Errc::integer_overflow, "add in " + context);
  return r;
}

std::int64_t checked_mul_scalar(std::int64_t x, std::int64_t y, const std::string& context) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) fail(Errc::integer_overflow, "mul in " + context);
  return r;
}

struct Mat3iHash {
  std::size_t operator()(const Mat3i& m) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (std::int64_t v : m.a) {
      h ^= static_cast<std::size_t>(v);
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

}  // namespace

Mat3 Mat3i::to_double() const {
  Mat3 r;
  for (int k = 0; k < 9; ++k) r.a[static_cast<std::size_t>(k)] = static_cast<double>(a[static_cast<std::size_t>(k)]);
  return r;
}

Mat3i checked_mul(const Mat3i& x, const Mat3i& y, const std::string& context) {
  Mat3i r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::int64_t s = 0;
      for (int k = 0; k < 3; ++k)
        s = checked_add(s, checked_mul_scalar(x(i, k), y(k, j), context), context);
      r(i, j) = s;
    }
  return r;
}

std::int64_t det(const Mat3i& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

CartanMatrixZ CartanMatrixZ::from(const Mat3i& m) {
  for (int i = 0; i < 3; ++i) {
    if (m(i, i) != 2) fail(Errc::invalid_argument, "Cartan matrix diagonal entries must be 2");
    for (int j = 0; j < 3; ++j)
      if (i != j && m(i, j) > 0)
        fail(Errc::invalid_argument, "Cartan matrix off-diagonal entries must be <= 0");
  }
  return CartanMatrixZ{m};
}

bool is_even(const GroupElement& g) { return g.word.size() % 2 == 0; }

std::array<GroupElement, 3> reflections(const CartanMatrixZ& c) {
  std::array<GroupElement, 3> out;
  for (int i = 0; i < 3; ++i) {
    Mat3i m = Mat3i::identity();
    for (int j = 0; j < 3; ++j) m(i, j) -= c.c(i, j);
    out[static_cast<std::size_t>(i)] = {m, std::string(1, static_cast<char>('1' + i))};
  }
  return out;
}

ProductOrders product_orders(const CartanMatrixZ& c) {
  const auto rho = reflections(c);
  auto order = [&](int i, int j) {
    const Mat3i p = checked_mul(rho[static_cast<std::size_t>(i)].m,
                                rho[static_cast<std::size_t>(j)].m, "product order");
    Mat3i acc = p;
    for (int k = 1; k <= 64; ++k) {
      if (acc == Mat3i::identity()) return k;
      acc = checked_mul(acc, p, "product order");
    }
    return ProductOrders::infinite;
  };
  return {order(0, 1), order(1, 2), order(0, 2)};
}

std::array<ProjPoint, 3> fundamental_triangle(const CartanMatrixZ& c) {
  auto row = [&](int i) {
    return Vec3{static_cast<double>(c.c(i, 0)), static_cast<double>(c.c(i, 1)),
                static_cast<double>(c.c(i, 2))};
  };
  std::array<ProjPoint, 3> v;
  static const int pairs[3][2] = {{1, 2}, {0, 2}, {0, 1}};
  for (int k = 0; k < 3; ++k) {
    const Vec3 x = cross(row(pairs[k][0]), row(pairs[k][1]));
    if (max_abs(x) <= 1e-300) fail(Errc::degenerate_cartan, "parallel Cartan rows");
    v[static_cast<std::size_t>(k)] = ProjPoint::from(x);
  }
  return v;
}

Enumeration enumerate(const CartanMatrixZ& c, int max_len) {
  if (max_len < 0 || max_len > 20) fail(Errc::invalid_argument, "enumerate: max_len must be in [0, 20]");
  const auto rho = reflections(c);

  Enumeration out;
  std::unordered_set<Mat3i, Mat3iHash> seen;
  out.elements.push_back({Mat3i::identity(), ""});
  seen.insert(Mat3i::identity());
  out.count_by_length.push_back(1);

  std::size_t level_begin = 0;
  std::size_t level_end = 1;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t frontier_start = out.elements.size();
    for (std::size_t e = level_begin; e < level_end; ++e) {
      // Copy: pushing new elements may reallocate the vector.
      const GroupElement parent = out.elements[e];
      for (int gen = 0; gen < 3; ++gen) {
        const std::string word = parent.word + static_cast<char>('1' + gen);
        const Mat3i m = checked_mul(parent.m, rho[static_cast<std::size_t>(gen)].m, "word " + word);
        if (seen.insert(m).second) out.elements.push_back({m, word});
      }
    }
    out.count_by_length.push_back(out.elements.size() - frontier_start);
    level_begin = frontier_start;
    level_end = out.elements.size();
    if (level_begin == level_end) break;  // group exhausted
  }
  return out;
}

Tiling tiling(const CartanMatrixZ& c, int max_len) {
  Tiling t;
  t.base = fundamental_triangle(c);
  Enumeration en = enumerate(c, max_len);
  t.tile_vertices.reserve(en.elements.size());
  for (const GroupElement& g : en.elements) {
    const Mat3 gd = g.m.to_double();
    std::array<ProjPoint, 3> verts;
    for (int k = 0; k < 3; ++k)
      verts[static_cast<std::size_t>(k)] = ProjPoint::from(mul(gd, t.base[static_cast<std::size_t>(k)].v));
    t.tile_vertices.push_back(verts);
  }
  t.elements = std::move(en.elements);
  return t;
}

}  // namespace rp2
