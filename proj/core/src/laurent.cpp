#include "kmlat/laurent.hpp"

#include "kmlat/error.hpp"

#include <algorithm>
#include <stdexcept>

namespace kmlat {

LaurentPoly lp_add(const Field& f, const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [e, v] : b.c) {
    auto it = r.c.try_emplace(e, 0).first;
    it->second = f.add(it->second, v);
    if (it->second == 0) r.c.erase(it);
  }
  return r;
}

LaurentPoly lp_neg(const Field& f, const LaurentPoly& a) {
  LaurentPoly r = a;
  for (auto& [e, v] : r.c) v = f.neg(v);
  return r;
}

LaurentPoly lp_mul(const Field& f, const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, va] : a.c)
    for (const auto& [eb, vb] : b.c) {
      auto it = r.c.try_emplace(ea + eb, 0).first;
      it->second = f.add(it->second, f.mul(va, vb));
      if (it->second == 0) r.c.erase(it);
    }
  return r;
}

std::string to_string(const LaurentPoly& p) {
  if (p.c.empty()) return "0";
  std::string s;
  for (const auto& [e, v] : p.c) {
    if (!s.empty()) s += " + ";
    if (e == 0) {
      s += std::to_string(v);
      continue;
    }
    if (v != 1) s += std::to_string(v);
    s += "z";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

LaurentMatrix lm_mul(const Field& f, const LaurentMatrix& x, const LaurentMatrix& y) {
  return {lp_add(f, lp_mul(f, x.a, y.a), lp_mul(f, x.b, y.c)), lp_add(f, lp_mul(f, x.a, y.b), lp_mul(f, x.b, y.d)),
          lp_add(f, lp_mul(f, x.c, y.a), lp_mul(f, x.d, y.c)), lp_add(f, lp_mul(f, x.c, y.b), lp_mul(f, x.d, y.d))};
}

LaurentPoly lm_det(const Field& f, const LaurentMatrix& m) {
  return lp_add(f, lp_mul(f, m.a, m.d), lp_neg(f, lp_mul(f, m.b, m.c)));
}

LaurentMatrix lm_inv(const Field& f, const LaurentMatrix& m) {
  if (lm_det(f, m) != LaurentPoly::constant(1)) throw Error(errc::determinant_not_one, "determinant is not 1");
  return {m.d, lp_neg(f, m.b), lp_neg(f, m.c), m.a};
}

std::string to_string(const LaurentMatrix& m) {
  return "[[" + to_string(m.a) + ", " + to_string(m.b) + "], [" + to_string(m.c) + ", " + to_string(m.d) + "]]";
}

void require_affine(const GroupContext& ctx) {
  if (!ctx.gcm().affine() || !ctx.datum.simply_connected())
    throw Error(errc::not_affine, "the matrix oracle models only the simply connected datum of 2,-2;-2,2");
}

namespace {

LaurentMatrix simple_x(const Field& f, int i, bool negative, Elem s) {
  const LaurentPoly one = LaurentPoly::constant(1);
  if (i == 1)
    return negative ? LaurentMatrix{one, {}, LaurentPoly::constant(f.neg(s)), one}
                    : LaurentMatrix{one, LaurentPoly::constant(s), {}, one};
  return negative ? LaurentMatrix{one, LaurentPoly::monomial(f.neg(s), -1), {}, one}
                  : LaurentMatrix{one, {}, LaurentPoly::monomial(s, 1), one};
}

LaurentMatrix simple_n(const Field& f, int i) {
  const auto x = simple_x(f, i, false, 1);
  return lm_mul(f, lm_mul(f, x, simple_x(f, i, true, 1)), x);
}

LaurentMatrix weyl_conj(const Field& f, const std::vector<int>& letters, const LaurentMatrix& m) {
  LaurentMatrix N = LaurentMatrix::identity();
  for (int l : letters) N = lm_mul(f, N, simple_n(f, l));
  return lm_mul(f, lm_mul(f, N, m), lm_inv(f, N));
}

} // namespace

LaurentMatrix oracle_embed(const GroupContext& ctx, const Atom& a) {
  require_affine(ctx);
  const Field& f = ctx.field;
  if (const auto* x = std::get_if<XAtom>(&a)) {
    const bool neg = x->root.negative();
    const Root pos = neg ? -x->root : x->root;
    auto d = decompose_root(ctx.gcm(), pos);
    if (!d) throw Error(errc::not_real_root, x->root.str() + " is not a real root");
    return weyl_conj(f, d->word.letters, simple_x(f, d->j, neg, x->c));
  }
  if (const auto* n = std::get_if<NAtom>(&a)) return simple_n(f, n->i);
  const auto& h = std::get<HAtom>(a).h;
  const Elem d = f.div(h.coords.at(0), h.coords.at(1));
  return {LaurentPoly::constant(d), {}, {}, LaurentPoly::constant(f.inv(d))};
}

LaurentMatrix oracle_embed(const GroupContext& ctx, const GroupWord& w) {
  LaurentMatrix m = LaurentMatrix::identity();
  for (const auto& a : w) m = lm_mul(ctx.field, m, oracle_embed(ctx, a));
  return m;
}

LaurentMatrix gallery_matrix(const GroupContext& ctx, const Edge& e) {
  require_affine(ctx);
  const Field& f = ctx.field;
  LaurentMatrix m = LaurentMatrix::identity();
  for (const auto& s : e.steps) m = lm_mul(f, m, lm_mul(f, simple_x(f, s.type, false, s.t), simple_n(f, s.type)));
  return m;
}

namespace {

// Distance between the lattice classes spanned by the columns of g and g2,
// given X = g^{-1} g2: v(det X) - 2 min v(X_kl).
int lattice_distance(const Field& f, const LaurentMatrix& X) {
  const int vd = lm_det(f, X).valuation();
  const int mv = std::min({X.a.valuation(), X.b.valuation(), X.c.valuation(), X.d.valuation()});
  return vd - 2 * mv;
}

const LaurentMatrix& diag_z() {
  static const LaurentMatrix D{LaurentPoly::constant(1), {}, {}, LaurentPoly::monomial(1, 1)};
  return D;
}

const LaurentMatrix& diag_z_inv() {
  static const LaurentMatrix D{LaurentPoly::constant(1), {}, {}, LaurentPoly::monomial(1, -1)};
  return D;
}

} // namespace

std::size_t oracle_edge_length(const Field& f, const LaurentMatrix& m) {
  const LaurentMatrix mD = lm_mul(f, m, diag_z());
  const int d11 = lattice_distance(f, m);
  const int d22 = lattice_distance(f, lm_mul(f, diag_z_inv(), mD));
  const int d12 = lattice_distance(f, mD);
  const int d21 = lattice_distance(f, lm_mul(f, diag_z_inv(), m));
  if (d11 == 0 && d22 == 0) return 0;
  return static_cast<std::size_t>(1 + std::min({d11, d22, d12, d21}));
}

Edge oracle_edge(const GroupContext& ctx, const LaurentMatrix& m0) {
  require_affine(ctx);
  const Field& f = ctx.field;
  if (lm_det(f, m0) != LaurentPoly::constant(1)) throw Error(errc::determinant_not_one, "determinant is not 1");
  Edge e;
  LaurentMatrix m = m0;
  std::size_t len = oracle_edge_length(f, m);
  while (len > 0) {
    int found = 0;
    GalleryStep step;
    LaurentMatrix next;
    for (int i = 1; i <= 2; ++i) {
      const LaurentMatrix ninv = lm_inv(f, simple_n(f, i));
      for (Elem t = 0; t < f.q(); ++t) {
        const LaurentMatrix cand = lm_mul(f, ninv, lm_mul(f, simple_x(f, i, false, f.neg(t)), m));
        if (oracle_edge_length(f, cand) + 1 == len) {
          ++found;
          step = {i, t};
          next = cand;
        }
      }
    }
    if (found != 1)
      throw std::logic_error("oracle reduction found " + std::to_string(found) + " length-decreasing steps");
    e.steps.push_back(step);
    m = next;
    --len;
  }
  return e;
}

Edge oracle_act(const GroupContext& ctx, const GroupWord& w, const Edge& e) {
  return oracle_edge(ctx, lm_mul(ctx.field, oracle_embed(ctx, w), gallery_matrix(ctx, e)));
}

} // namespace kmlat
