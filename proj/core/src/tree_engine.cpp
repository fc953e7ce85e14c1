#include "kmlat/tree_engine.hpp"

#include "kmlat/error.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace kmlat {

void validate(const Field& f, const Edge& e) {
  for (std::size_t k = 0; k < e.steps.size(); ++k) {
    const auto& s = e.steps[k];
    if (s.type != 1 && s.type != 2) throw Error(errc::parse_error, "gallery type must be 1 or 2");
    if (s.t >= f.q()) throw Error(errc::parse_error, "gallery coordinate " + std::to_string(s.t) + " >= q");
    if (k > 0 && e.steps[k - 1].type == s.type) throw Error(errc::parse_error, "gallery types must alternate");
  }
}

Vertex vertex_of(const Edge& e, int type) {
  Vertex v{e, type};
  if (!v.edge.steps.empty() && v.edge.steps.back().type == type) v.edge.steps.pop_back();
  return v;
}

void Budget::charge(std::uint64_t n) {
  used_ += n;
  if (used_ > limit_)
    throw Error(errc::budget_exceeded, "normalization budget of " + std::to_string(limit_) + " carry steps exceeded");
}

void validate(const GroupContext& ctx, const Atom& a) {
  if (const auto* x = std::get_if<XAtom>(&a)) {
    if (classify_root(ctx.gcm(), x->root) == RootClass::NotReal)
      throw Error(errc::not_real_root, x->root.str() + " is not a real root");
    if (x->c >= ctx.field.q()) throw Error(errc::parse_error, "coefficient out of range");
  } else if (const auto* n = std::get_if<NAtom>(&a)) {
    if (n->i != 1 && n->i != 2) throw Error(errc::parse_error, "n(i) needs i in {1,2}");
  } else {
    validate(ctx.datum, std::get<HAtom>(a).h);
  }
}

namespace {

UWord xi(int i, Elem c) {
  UWord w;
  if (c != 0) w.syllables.push_back(Syllable{i, {{Root::simple(i), c}}});
  return w;
}

UWord single(const Syllable& s) {
  UWord w;
  w.syllables.push_back(s);
  return w;
}

UWord expect_u(std::variant<UWord, NeedsSL2> r) {
  if (auto* u = std::get_if<UWord>(&r)) return std::move(*u);
  throw std::logic_error("alpha_i coordinate left in an n_i conjugation");
}

// n_i^{-1} v n_i for v in the kernel of ret_i.
UWord phi(const GroupContext& ctx, int i, const UWord& v) {
  const Field& f = ctx.field;
  const Root ai = Root::simple(i);
  UWord acc;
  Elem A = 0;
  for (const auto& s : v.syllables) {
    if (s.side == i) {
      Syllable rest = s;
      Elem a = 0;
      if (auto it = rest.coords.find(ai); it != rest.coords.end()) {
        a = it->second;
        rest.coords.erase(it);
      }
      if (!rest.coords.empty())
        acc = u_mul(f, acc, expect_u(conj_by_n_inv(ctx.gcm(), ctx.eps, f, i, single(rest))));
      A = f.add(A, a);
    } else if (A == 0) {
      acc = u_mul(f, acc, expect_u(conj_by_n_inv(ctx.gcm(), ctx.eps, f, i, single(s))));
    } else {
      // n^{-1} x_i(A) S x_i(-A) n = x_i(-1/A) h_i(1/A) S h_i(1/A)^{-1} x_i(1/A).
      const Elem inv = f.inv(A);
      const UWord mid = conj_by_torus(ctx.datum, f, coroot_torus(ctx.datum, f, i, inv), single(s));
      acc = u_mul(f, acc, xi(i, f.neg(inv)));
      acc = u_mul(f, acc, mid);
      acc = u_mul(f, acc, xi(i, inv));
    }
  }
  if (A != 0) throw std::logic_error("phi called outside the kernel of the retraction");
  return acc;
}

} // namespace

CarryResult carry(const GroupContext& ctx, const BElement& b, GalleryStep step, Budget& budget) {
  budget.charge();
  const Field& f = ctx.field;
  const int i = step.type;
  const Elem t1 = f.mul(char_eval(ctx.datum, f, i, b.h), step.t);
  const UWord v0 = u_mul(f, b.u, xi(i, t1));
  const Elem r = retraction(f, i, v0);
  const UWord v = u_mul(f, xi(i, f.neg(r)), v0);
  return {GalleryStep{i, r}, BElement{phi(ctx, i, v), weyl_act(ctx.datum, f, i, b.h)}};
}

std::pair<Edge, BElement> act_b(const GroupContext& ctx, const BElement& b, const Edge& e, Budget& budget) {
  Edge out;
  out.steps.reserve(e.steps.size());
  BElement cur = b;
  for (const auto& s : e.steps) {
    auto r = carry(ctx, cur, s, budget);
    out.steps.push_back(r.step);
    cur = std::move(r.residue);
  }
  return {std::move(out), std::move(cur)};
}

GroupWord expand_atom(const GroupContext& ctx, const Atom& a) {
  const auto* x = std::get_if<XAtom>(&a);
  if (!x || !x->root.negative()) return {a};
  const Gcm& g = ctx.gcm();
  auto d = decompose_root(g, x->root);
  if (!d) throw Error(errc::not_real_root, x->root.str() + " is not a real root");
  const auto& L = d->word.letters;
  Root beta = Root::simple(d->j);
  int sign = 1;
  for (auto it = L.rbegin(); it != L.rend(); ++it) {
    sign *= relation_sign(g, ctx.eps, *it, beta);
    beta = reflect(g, *it, beta);
  }
  if (beta != x->root) throw std::logic_error("root decomposition does not reproduce " + x->root.str());
  const Field& f = ctx.field;
  GroupWord w;
  for (int l : L) w.push_back(NAtom{l});
  w.push_back(XAtom{Root::simple(d->j), sign == 1 ? x->c : f.neg(x->c)});
  for (auto it = L.rbegin(); it != L.rend(); ++it) {
    w.push_back(HAtom{coroot_torus(ctx.datum, f, *it, f.neg(1))});
    w.push_back(NAtom{*it});
  }
  return w;
}

GroupElement group_identity(const GroupContext& ctx) { return {Edge{}, b_identity(ctx.datum)}; }

GroupElement left_mul(const GroupContext& ctx, const Atom& a, const GroupElement& g, Budget& budget) {
  const Field& f = ctx.field;
  const RootDatum& D = ctx.datum;
  auto apply_b = [&](const BElement& b0, const Edge& e, const BElement& tail) {
    auto [e2, b2] = act_b(ctx, b0, e, budget);
    return GroupElement{std::move(e2), b_mul(D, f, b2, tail)};
  };

  if (const auto* x = std::get_if<XAtom>(&a)) {
    if (x->root.negative()) {
      GroupElement r = g;
      const GroupWord w = expand_atom(ctx, a);
      for (auto it = w.rbegin(); it != w.rend(); ++it) r = left_mul(ctx, *it, r, budget);
      return r;
    }
    return apply_b(BElement{root_element(ctx.gcm(), x->root, x->c), TorusElement::identity(D)}, g.edge, g.b);
  }
  if (const auto* h = std::get_if<HAtom>(&a)) return apply_b(BElement{UWord{}, h->h}, g.edge, g.b);

  const int i = std::get<NAtom>(a).i;
  const auto& st = g.edge.steps;
  if (st.empty() || st.front().type != i) {
    GroupElement r = g;
    r.edge.steps.insert(r.edge.steps.begin(), GalleryStep{i, 0});
    return r;
  }
  Edge rest;
  rest.steps.assign(st.begin() + 1, st.end());
  const Elem t = st.front().t;
  if (t == 0) return apply_b(BElement{UWord{}, coroot_torus(D, f, i, f.neg(1))}, rest, g.b);
  // n x_i(t) n = x_i(-1/t) n x_i(-t) h_i(-t).
  GroupElement r = apply_b(BElement{xi(i, f.neg(t)), coroot_torus(D, f, i, f.neg(t))}, rest, g.b);
  r.edge.steps.insert(r.edge.steps.begin(), GalleryStep{i, f.neg(f.inv(t))});
  return r;
}

GroupElement left_mul(const GroupContext& ctx, const GroupWord& w, const GroupElement& g, Budget& budget) {
  GroupElement r = g;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = left_mul(ctx, *it, r, budget);
  return r;
}

GroupElement evaluate(const GroupContext& ctx, const GroupWord& w, Budget& budget) {
  return left_mul(ctx, w, group_identity(ctx), budget);
}

GroupWord to_word(const GroupContext& ctx, const GroupElement& g) {
  GroupWord w;
  for (const auto& s : g.edge.steps) {
    if (s.t != 0) w.push_back(XAtom{Root::simple(s.type), s.t});
    w.push_back(NAtom{s.type});
  }
  for (const auto& syl : g.b.u.syllables)
    for (const auto& [r, c] : syl.coords) w.push_back(XAtom{r, c});
  if (!g.b.h.is_identity()) w.push_back(HAtom{g.b.h});
  (void)ctx;
  return w;
}

GroupElement group_mul(const GroupContext& ctx, const GroupElement& x, const GroupElement& y, Budget& budget) {
  return left_mul(ctx, to_word(ctx, x), y, budget);
}

Edge act(const GroupContext& ctx, const GroupWord& w, const Edge& e, Budget& budget) {
  return left_mul(ctx, w, GroupElement{e, b_identity(ctx.datum)}, budget).edge;
}

Edge act(const GroupContext& ctx, const GroupElement& g, const Edge& e, Budget& budget) {
  return act(ctx, to_word(ctx, g), e, budget);
}

Vertex act(const GroupContext& ctx, const GroupElement& g, const Vertex& v, Budget& budget) {
  return vertex_of(act(ctx, g, v.edge, budget), v.type);
}

ProjPoint local_action(const GroupContext& ctx, const Atom& a, int type, ProjPoint c) {
  const Field& f = ctx.field;
  if (const auto* x = std::get_if<XAtom>(&a)) {
    if (x->root == Root::simple(type)) return c.infinite ? c : ProjPoint::at(f.add(c.c, x->c));
    if (x->root.positive()) {
      if (classify_root(ctx.gcm(), x->root) == RootClass::NotReal)
        throw Error(errc::not_real_root, x->root.str() + " is not a real root");
      return c;
    }
    if (x->root == -Root::simple(type)) {
      const GroupWord w = expand_atom(ctx, a);
      for (auto it = w.rbegin(); it != w.rend(); ++it) c = local_action(ctx, *it, type, c);
      return c;
    }
    throw Error(errc::atom_not_in_parabolic, "x" + x->root.str() + " is not in P_" + std::to_string(type));
  }
  if (const auto* h = std::get_if<HAtom>(&a))
    return c.infinite ? c : ProjPoint::at(f.mul(char_eval(ctx.datum, f, type, h->h), c.c));
  const int i = std::get<NAtom>(a).i;
  if (i != type) throw Error(errc::atom_not_in_parabolic, "n" + std::to_string(i) + " is not in P_" + std::to_string(type));
  if (c.infinite) return ProjPoint::at(0);
  if (c.c == 0) return ProjPoint::inf();
  return ProjPoint::at(f.neg(f.inv(c.c)));
}

std::vector<Edge> ball(std::uint32_t q, int R) {
  std::vector<Edge> out{Edge{}};
  std::size_t start = 0;
  for (int len = 1; len <= R; ++len) {
    const std::size_t end = out.size();
    for (std::size_t k = start; k < end; ++k) {
      const Edge base = out[k];
      for (int type = 1; type <= 2; ++type) {
        if (!base.steps.empty() && base.steps.back().type == type) continue;
        for (Elem t = 0; t < q; ++t) {
          Edge e = base;
          e.steps.push_back({type, t});
          out.push_back(std::move(e));
        }
      }
    }
    start = end;
  }
  return out;
}

std::vector<Vertex> ball_vertices(std::uint32_t q, int R) {
  std::set<Vertex> vs;
  for (const auto& e : ball(q, R))
    for (int type = 1; type <= 2; ++type) vs.insert(vertex_of(e, type));
  return {vs.begin(), vs.end()};
}

} // namespace kmlat
