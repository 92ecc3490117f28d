#include "rp2/rootsys.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace rp2 {

std::string Root::name() const { return "alpha_" + std::to_string(i) + std::to_string(j); }

std::string RootVector::name() const { return "h_" + std::to_string(i) + std::to_string(j); }

const std::array<Root, 6>& roots() {
  static const std::array<Root, 6> table = {{
      {1, 2, {1, -1}},
      {2, 1, {-1, 1}},
      {2, 3, {1, 2}},
      {3, 2, {-1, -2}},
      {3, 1, {-2, -1}},
      {1, 3, {2, 1}},
  }};
  return table;
}

const std::array<RootVector, 6>& root_vectors() {
  static const std::array<RootVector, 6> table = {{
      {1, 2, {1, -1}},
      {2, 1, {-1, 1}},
      {2, 3, {0, 1}},
      {3, 2, {0, -1}},
      {3, 1, {-1, 0}},
      {1, 3, {1, 0}},
  }};
  return table;
}

const Root& root(int i, int j) {
  for (const Root& r : roots())
    if (r.i == i && r.j == j) return r;
  fail(Errc::invalid_argument, "no such root label");
}

const RootVector& root_vector(int i, int j) {
  for (const RootVector& r : root_vectors())
    if (r.i == i && r.j == j) return r;
  fail(Errc::invalid_argument, "no such root vector label");
}

double root_value(const Root& alpha, const CartanElement& a) {
  return alpha.row[0] * a.s + alpha.row[1] * a.t;
}

double trace_form(const CartanElement& a, const CartanElement& b) {
  const Vec3 da = a.diag();
  const Vec3 db = b.diag();
  return da[0] * db[0] + da[1] * db[1] + da[2] * db[2];
}

bool in_weyl_chamber(const CartanElement& a, bool closed) {
  const double r12 = a.s - a.t;
  const double r23 = a.s + 2 * a.t;
  if (closed) return r12 >= -1e-12 && r23 >= -1e-12;
  return r12 > 1e-12 && r23 > 1e-12;
}

std::array<CartanElement, 6> weyl_orbit(const CartanElement& a) {
  const Vec3 d = a.diag();
  static const int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::array<CartanElement, 6> out;
  for (int k = 0; k < 6; ++k)
    out[static_cast<std::size_t>(k)] = {d[perm[k][0]], d[perm[k][1]]};
  return out;
}

bool is_regular(const CartanElement& a, double tol) {
  for (const Root& r : roots())
    if (std::abs(root_value(r, a)) <= tol) return false;
  return true;
}

Collineation exp_cartan(const CartanElement& a) {
  return Collineation::from(Mat3::diagonal(std::exp(a.s), std::exp(a.t), std::exp(-a.s - a.t)));
}

std::pair<CartanElement, CartanElement> singular_rays() { return {{1, 1}, {2, -1}}; }

std::vector<Root> root_ordering() {
  const CartanElement ref{2, 1};
  std::vector<Root> sorted(roots().begin(), roots().end());
  std::stable_sort(sorted.begin(), sorted.end(), [&](const Root& a, const Root& b) {
    return root_value(a, ref) > root_value(b, ref);
  });
  return sorted;
}

bool RootCheckReport::all_pass() const {
  for (const Item& it : items)
    if (!it.pass) return false;
  return true;
}

RootCheckReport run_root_checks() { return run_root_checks(roots(), root_vectors()); }

RootCheckReport run_root_checks(const std::array<Root, 6>& root_table,
                                const std::array<RootVector, 6>& vector_table) {
  RootCheckReport rep;
  auto push = [&rep](const std::string& name, bool pass, const std::string& detail = "") {
    rep.items.push_back({name, pass, detail});
  };

  // alpha_ji = -alpha_ij as row vectors.
  {
    bool ok = true;
    for (const Root& r : root_table) {
      bool found = false;
      for (const Root& o : root_table)
        if (o.i == r.j && o.j == r.i) {
          found = true;
          ok = ok && o.row[0] == -r.row[0] && o.row[1] == -r.row[1];
        }
      ok = ok && found;
    }
    push("negation_symmetry", ok);
  }

  // Row vectors agree with a |-> a_i - a_j on the diagonal representation.
  {
    bool ok = true;
    std::mt19937_64 rng(0x5eed0001);
    std::uniform_real_distribution<double> u(-10, 10);
    for (int k = 0; k < 200 && ok; ++k) {
      const CartanElement a{u(rng), u(rng)};
      const Vec3 d = a.diag();
      for (const Root& r : root_table)
        ok = ok && std::abs(root_value(r, a) - (d[r.i - 1] - d[r.j - 1])) <= 1e-12;
    }
    push("row_vectors_match_functionals", ok);
  }

  // Duality: tr(h_ij a) = alpha_ij(a) over 1000 random a.
  {
    bool ok = true;
    std::mt19937_64 rng(0x5eed0002);
    std::uniform_real_distribution<double> u(-10, 10);
    for (int k = 0; k < 1000 && ok; ++k) {
      const CartanElement a{u(rng), u(rng)};
      for (const RootVector& hv : vector_table) {
        const Root* alpha = nullptr;
        for (const Root& r : root_table)
          if (r.i == hv.i && r.j == hv.j) alpha = &r;
        if (!alpha) {
          ok = false;
          break;
        }
        ok = ok && std::abs(trace_form(hv.h, a) - root_value(*alpha, a)) <= 1e-12;
      }
    }
    push("trace_form_duality", ok);
  }

  // Quadratic form tr(a^2) = 2(s^2 + st + t^2).
  {
    bool ok = true;
    std::mt19937_64 rng(0x5eed0003);
    std::uniform_real_distribution<double> u(-10, 10);
    for (int k = 0; k < 1000 && ok; ++k) {
      const CartanElement a{u(rng), u(rng)};
      ok = std::abs(trace_form(a, a) - 2 * (a.s * a.s + a.s * a.t + a.t * a.t)) <= 1e-12;
    }
    push("quadratic_form", ok);
  }

  // Weyl invariance of the trace form.
  {
    bool ok = true;
    std::mt19937_64 rng(0x5eed0004);
    std::uniform_real_distribution<double> u(-5, 5);
    for (int k = 0; k < 200 && ok; ++k) {
      const CartanElement a{u(rng), u(rng)};
      const CartanElement b{u(rng), u(rng)};
      const auto oa = weyl_orbit(a);
      const auto ob = weyl_orbit(b);
      for (int w = 0; w < 6; ++w)
        ok = ok && std::abs(trace_form(oa[static_cast<std::size_t>(w)],
                                       ob[static_cast<std::size_t>(w)]) -
                            trace_form(a, b)) <= 1e-10;
    }
    push("weyl_invariance", ok);
  }

  // Exactly one orbit element of a regular point lies in the closed chamber.
  {
    bool ok = true;
    std::mt19937_64 rng(0x5eed0005);
    std::uniform_real_distribution<double> u(-10, 10);
    int tested = 0;
    while (tested < 1000 && ok) {
      const CartanElement a{u(rng), u(rng)};
      if (!is_regular(a, 1e-6)) continue;
      ++tested;
      int hits = 0;
      for (const CartanElement& w : weyl_orbit(a))
        if (in_weyl_chamber(w, true)) ++hits;
      ok = hits == 1;
    }
    push("chamber_transversal", ok);
  }

  // Singular decompositions, exact in integer coordinates.
  {
    const auto [r1, r2] = singular_rays();
    auto eq = [](const CartanElement& a, const CartanElement& b) {
      return a.s == b.s && a.t == b.t;
    };
    const CartanElement h12 = root_vector(1, 2).h;
    const CartanElement h13 = root_vector(1, 3).h;
    const CartanElement h23 = root_vector(2, 3).h;
    bool ok = eq(r1, h13 + h23) && eq(r1, h12 + h23 * 2.0) && eq(r2, h12 + h13) &&
              eq(r2, h12 * 2.0 + h23);
    ok = ok && eq(CartanElement{1, 0}, h12 + h23) && eq(CartanElement{1, 0}, h13);
    push("singular_decompositions", ok);
  }

  // Boundary rays are singular: one simple root vanishes on each.
  {
    const auto [r1, r2] = singular_rays();
    const bool ok = std::abs(root_value(root(1, 2), r1)) == 0.0 &&
                    std::abs(root_value(root(2, 3), r2)) == 0.0 &&
                    in_weyl_chamber(r1, true) && in_weyl_chamber(r2, true) &&
                    !in_weyl_chamber(r1, false) && !in_weyl_chamber(r2, false);
    push("singular_rays_on_boundary", ok);
  }

  // Total-order sanity on the reference point: extremes and sign split.
  {
    const auto sorted = root_ordering();
    const CartanElement ref{2, 1};
    bool ok = sorted.size() == 6;
    ok = ok && sorted.front().i == 1 && sorted.front().j == 3;
    ok = ok && sorted.back().i == 3 && sorted.back().j == 1;
    for (int k = 0; k < 3 && ok; ++k)
      ok = root_value(sorted[static_cast<std::size_t>(k)], ref) > 0;
    for (int k = 3; k < 6 && ok; ++k)
      ok = root_value(sorted[static_cast<std::size_t>(k)], ref) < 0;
    push("root_ordering_split", ok);
  }

  // H_t = exp(a(t,0)) has the displayed diagonal form.
  {
    const Collineation h1 = exp_cartan({1, 0});
    const Mat3 want = Mat3::diagonal(std::exp(1.0), 1.0, std::exp(-1.0));
    push("exp_cartan_h_t", max_abs(h1.m - want) <= 1e-12);
  }

  return rep;
}

}  // namespace rp2
