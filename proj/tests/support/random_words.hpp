#pragma once

#include "kmlat/lie_signs.hpp"
#include "kmlat/root_datum.hpp"
#include "kmlat/tree_engine.hpp"
#include "kmlat/unipotent.hpp"

#include <random>
#include <string>
#include <vector>

// Seeded generators for randomized checks.
namespace randgen {

using namespace kmlat;

class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Elem nonzero(const Field& f) { return static_cast<Elem>(uniform(1, static_cast<int>(f.q()) - 1)); }
  Elem any(const Field& f) { return static_cast<Elem>(uniform(0, static_cast<int>(f.q()) - 1)); }
  template <class T> const T& pick(const std::vector<T>& v) { return v[uniform(0, static_cast<int>(v.size()) - 1)]; }

  UWord uword(const Gcm& g, const Field& f, const std::vector<Root>& roots, int atoms) {
    UWord u;
    for (int k = 0; k < atoms; ++k) u = u_mul(f, u, root_element(g, pick(roots), nonzero(f)));
    return u;
  }

  TorusElement torus(const GroupContext& ctx) {
    TorusElement h = TorusElement::identity(ctx.datum);
    for (auto& c : h.coords) c = nonzero(ctx.field);
    return h;
  }

  Atom atom(const GroupContext& ctx, const std::vector<Root>& roots) {
    switch (uniform(0, 3)) {
    case 0: return NAtom{uniform(1, 2)};
    case 1: return HAtom{torus(ctx)};
    case 2: return XAtom{-Root::simple(uniform(1, 2)), any(ctx.field)};
    default: return XAtom{pick(roots), any(ctx.field)};
    }
  }

  GroupWord word(const GroupContext& ctx, const std::vector<Root>& roots, int len) {
    GroupWord w;
    for (int k = 0; k < len; ++k) w.push_back(atom(ctx, roots));
    return w;
  }

  Edge edge(const Field& f, int max_len) {
    Edge e;
    const int len = uniform(0, max_len);
    int type = uniform(1, 2);
    for (int k = 0; k < len; ++k, type = 3 - type) e.steps.push_back({type, any(f)});
    return e;
  }

private:
  std::mt19937_64 rng_;
};

inline GroupContext context(int a12, int a21, const std::string& q) {
  const Gcm g = Gcm::make(a12, a21);
  return {RootDatum::simply_connected(g), Field::parse(q), epsilon_pair(g).eps};
}

inline std::vector<Root> real_roots(const Gcm& g, int per_side) {
  auto r = positive_roots(g, 1, per_side);
  const auto s = positive_roots(g, 2, per_side);
  r.insert(r.end(), s.begin(), s.end());
  return r;
}

inline GroupWord inverse(const GroupContext& ctx, const GroupWord& w) {
  GroupWord r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (const auto* x = std::get_if<XAtom>(&*it)) {
      r.push_back(XAtom{x->root, ctx.field.neg(x->c)});
    } else if (const auto* n = std::get_if<NAtom>(&*it)) {
      for (int k = 0; k < 3; ++k) r.push_back(*n);
    } else {
      r.push_back(HAtom{torus_inv(ctx.field, std::get<HAtom>(*it).h)});
    }
  }
  return r;
}

inline GroupWord concat(GroupWord a, const GroupWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

} // namespace randgen
