#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "rp2/projlin.hpp"

namespace rp2 {

/// Traceless diagonal element a(s,t) = diag(s, t, -s-t) of the Cartan
/// subalgebra of sl(3,R).
struct CartanElement {
  double s = 0;
  double t = 0;

  Vec3 diag() const { return {s, t, -s - t}; }

  CartanElement operator+(const CartanElement& o) const { return {s + o.s, t + o.t}; }
  CartanElement operator-(const CartanElement& o) const { return {s - o.s, t - o.t}; }
  CartanElement operator*(double c) const { return {c * s, c * t}; }
};

/// Root alpha_ij : a |-> a_i - a_j, stored as the exact integer row vector
/// acting on (s, t).
struct Root {
  int i = 0;
  int j = 0;
  std::array<int, 2> row{};

  std::string name() const;
};

/// Element h_ij of the Cartan subalgebra dual to alpha_ij under the trace form.
struct RootVector {
  int i = 0;
  int j = 0;
  CartanElement h;

  std::string name() const;
};

/// The six roots in fixed order: 12, 21, 23, 32, 31, 13.
const std::array<Root, 6>& roots();
const std::array<RootVector, 6>& root_vectors();
const Root& root(int i, int j);
const RootVector& root_vector(int i, int j);

double root_value(const Root& alpha, const CartanElement& a);

/// tr(a b) of the represented diagonal matrices; tr(a^2) = 2(s^2 + st + t^2).
double trace_form(const CartanElement& a, const CartanElement& b);

bool in_weyl_chamber(const CartanElement& a, bool closed);

/// All six coordinate permutations of (a1, a2, a3), re-expressed as (s, t).
std::array<CartanElement, 6> weyl_orbit(const CartanElement& a);

/// True when all six roots are nonzero on a.
bool is_regular(const CartanElement& a, double tol = 1e-12);

/// diag(e^s, e^t, e^{-s-t}); exp_cartan({t, 0}) is the one-parameter
/// subgroup H_t.
Collineation exp_cartan(const CartanElement& a);

/// The two chamber-boundary rays a(1,1) and a(2,-1).
std::pair<CartanElement, CartanElement> singular_rays();

/// The six roots sorted by decreasing value on the interior chamber point
/// a(2,1). The extremes 13 and 31 and the positive/negative split are
/// canonical; the two positive simple roots are not comparable pointwise on
/// the chamber, so their relative position depends on the evaluation point.
std::vector<Root> root_ordering();

/// Identity checks behind `rp2 roots`. Tables are injectable so a fault in
/// the data is observable in the report.
struct RootCheckReport {
  struct Item {
    std::string name;
    bool pass = false;
    std::string detail;
  };
  std::vector<Item> items;

  bool all_pass() const;
};

RootCheckReport run_root_checks();
RootCheckReport run_root_checks(const std::array<Root, 6>& root_table,
                                const std::array<RootVector, 6>& vector_table);

}  // namespace rp2
