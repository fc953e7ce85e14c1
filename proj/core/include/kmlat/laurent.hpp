#pragma once

#include "kmlat/ffield.hpp"
#include "kmlat/tree_engine.hpp"

#include <climits>
#include <map>
#include <string>

namespace kmlat {

/// Laurent polynomial over F_q: exponent -> nonzero coefficient.
struct LaurentPoly {
  std::map<int, Elem> c;

  static LaurentPoly constant(Elem a) {
    LaurentPoly p;
    if (a != 0) p.c[0] = a;
    return p;
  }
  static LaurentPoly monomial(Elem a, int e) {
    LaurentPoly p;
    if (a != 0) p.c[e] = a;
    return p;
  }

  bool zero() const noexcept { return c.empty(); }
  /// z-adic valuation; INT_MAX for 0.
  int valuation() const noexcept { return c.empty() ? INT_MAX : c.begin()->first; }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
};

LaurentPoly lp_add(const Field& f, const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_neg(const Field& f, const LaurentPoly& a);
LaurentPoly lp_mul(const Field& f, const LaurentPoly& a, const LaurentPoly& b);
/// "3z^-1 + 1 + 2z"
std::string to_string(const LaurentPoly& p);

/// 2x2 matrix [[a, b], [c, d]] over F_q[z, z^{-1}].
struct LaurentMatrix {
  LaurentPoly a, b, c, d;

  static LaurentMatrix identity() {
    return {LaurentPoly::constant(1), {}, {}, LaurentPoly::constant(1)};
  }
  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;
};

LaurentMatrix lm_mul(const Field& f, const LaurentMatrix& x, const LaurentMatrix& y);
LaurentPoly lm_det(const Field& f, const LaurentMatrix& m);
/// Inverse of a determinant-1 matrix; throws DeterminantNotOne.
LaurentMatrix lm_inv(const Field& f, const LaurentMatrix& m);
std::string to_string(const LaurentMatrix& m);

/// Model of the affine case A = [[2,-2],[-2,2]] (simply connected) inside
/// SL2(F_q[z, z^{-1}]): x_{a1}(t) = [[1,t],[0,1]], x_{a2}(t) = [[1,0],[tz,1]],
/// x_{-a1}(s) = [[1,0],[-s,1]], x_{-a2}(s) = [[1,-s/z],[0,1]], n_i the
/// n_{alpha_i}(1) products and h = (s,t) -> diag(s/t, t/s). Other real roots
/// alpha = w(alpha_j) use x_alpha(s) = N_w x_{alpha_j}(s) N_w^{-1}, and
/// x_{-alpha}(s) = N_w x_{-alpha_j}(s) N_w^{-1}. Throws NotAffine.
LaurentMatrix oracle_embed(const GroupContext& ctx, const Atom& a);
LaurentMatrix oracle_embed(const GroupContext& ctx, const GroupWord& w);
/// Matrix of x_{i1}(t1) n_{i1} ... x_{il}(tl) n_{il}.
LaurentMatrix gallery_matrix(const GroupContext& ctx, const Edge& e);

/// Gallery distance of m B from the base edge, via lattice distances.
std::size_t oracle_edge_length(const Field& f, const LaurentMatrix& m);

/// Canonical gallery of the edge m B (Iwahori coset), peeling one step at a
/// time; each step is asserted to be the unique length-decreasing one.
/// Throws DeterminantNotOne.
Edge oracle_edge(const GroupContext& ctx, const LaurentMatrix& m);

/// oracle_edge(embed(w) * gallery_matrix(e)).
Edge oracle_act(const GroupContext& ctx, const GroupWord& w, const Edge& e);

/// Throws NotAffine unless the context is the simply connected affine datum.
void require_affine(const GroupContext& ctx);

} // namespace kmlat
