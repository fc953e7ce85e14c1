#include "kmlat/unipotent.hpp"

#include "kmlat/error.hpp"

namespace kmlat {

int root_side(const Gcm& gcm, Root alpha) {
  switch (classify_root(gcm, alpha)) {
  case RootClass::Pos1: return 1;
  case RootClass::Pos2: return 2;
  default: throw Error(errc::not_real_root, alpha.str() + " is not a positive real root");
  }
}

UWord root_element(const Gcm& gcm, Root alpha, Elem c) {
  Syllable s;
  s.side = root_side(gcm, alpha);
  UWord w;
  if (c != 0) {
    s.coords[alpha] = c;
    w.syllables.push_back(std::move(s));
  }
  return w;
}

namespace {

void add_into(const Field& f, Syllable& acc, const Syllable& s) {
  for (const auto& [r, c] : s.coords) {
    auto it = acc.coords.try_emplace(r, 0).first;
    it->second = f.add(it->second, c);
    if (it->second == 0) acc.coords.erase(it);
  }
}

} // namespace

UWord normalize(const Field& f, std::vector<Syllable> syllables) {
  UWord out;
  for (auto& s : syllables) {
    for (auto it = s.coords.begin(); it != s.coords.end();) it = it->second == 0 ? s.coords.erase(it) : std::next(it);
    if (s.coords.empty()) continue;
    // Merging may empty the last syllable and expose another merge.
    while (!out.syllables.empty() && out.syllables.back().side == s.side) {
      Syllable last = std::move(out.syllables.back());
      out.syllables.pop_back();
      add_into(f, last, s);
      s = std::move(last);
      if (s.coords.empty()) break;
    }
    if (!s.coords.empty()) out.syllables.push_back(std::move(s));
  }
  return out;
}

UWord u_mul(const Field& f, const UWord& x, const UWord& y) {
  std::vector<Syllable> all = x.syllables;
  all.insert(all.end(), y.syllables.begin(), y.syllables.end());
  return normalize(f, std::move(all));
}

UWord u_inv(const Field& f, const UWord& x) {
  UWord out;
  for (auto it = x.syllables.rbegin(); it != x.syllables.rend(); ++it) {
    Syllable s = *it;
    for (auto& [r, c] : s.coords) c = f.neg(c);
    out.syllables.push_back(std::move(s));
  }
  return out;
}

UWord u_pow(const Field& f, const UWord& x, std::uint64_t n) {
  UWord r;
  UWord base = x;
  while (n) {
    if (n & 1u) r = u_mul(f, r, base);
    base = u_mul(f, base, base);
    n >>= 1u;
  }
  return r;
}

TorsionInfo torsion_class(const Field& f, const UWord& x) {
  TorsionInfo t;
  UWord w = x;
  while (w.length() >= 2 && w.syllables.front().side == w.syllables.back().side) {
    UWord first;
    first.syllables.push_back(w.syllables.front());
    UWord rest;
    rest.syllables.assign(w.syllables.begin() + 1, w.syllables.end());
    w = u_mul(f, rest, first);
    t.conjugator = u_mul(f, t.conjugator, first);
  }
  t.core = w;
  switch (w.length()) {
  case 0:
    t.kind = TorsionKind::Identity;
    t.order = 1;
    break;
  case 1:
    t.kind = TorsionKind::PPowerInFactorConjugate;
    t.order = f.p();
    break;
  default:
    t.kind = TorsionKind::Infinite;
    t.order = 0;
  }
  return t;
}

Elem retraction(const Field& f, int i, const UWord& x) {
  Elem r = 0;
  for (const auto& s : x.syllables) {
    if (s.side != i) continue;
    auto it = s.coords.find(Root::simple(i));
    if (it != s.coords.end()) r = f.add(r, it->second);
  }
  return r;
}

UWord conj_by_torus(const RootDatum& datum, const Field& f, const TorusElement& h, const UWord& x) {
  if (h.is_identity()) return x;
  UWord out = x;
  for (auto& s : out.syllables)
    for (auto& [r, c] : s.coords) c = f.mul(c, char_eval(datum, f, r, h));
  return out;
}

namespace {

std::variant<UWord, NeedsSL2> conj_n_impl(const Gcm& gcm, EpsilonPair eps, const Field& f, int i,
                                          const UWord& x, bool inverse) {
  const Root ai = Root::simple(i);
  for (const auto& s : x.syllables)
    if (s.side == i && s.coords.count(ai)) return NeedsSL2{i};
  UWord out;
  for (const auto& s : x.syllables) {
    Syllable t;
    t.side = 3 - s.side;
    for (const auto& [r, c] : s.coords) {
      const Root img = reflect(gcm, i, r);
      // n x_r(c) n^{-1} = x_{w_i r}(eps_{i,r} c); n^{-1} x_r(c) n = x_{w_i r}(eps_{i,w_i r} c).
      const int sign = relation_sign(gcm, eps, i, inverse ? img : r);
      t.coords[img] = sign == 1 ? c : f.neg(c);
    }
    out.syllables.push_back(std::move(t));
  }
  return out;
}

} // namespace

std::variant<UWord, NeedsSL2> conj_by_n(const Gcm& gcm, EpsilonPair eps, const Field& f, int i,
                                        const UWord& x) {
  return conj_n_impl(gcm, eps, f, i, x, false);
}

std::variant<UWord, NeedsSL2> conj_by_n_inv(const Gcm& gcm, EpsilonPair eps, const Field& f, int i,
                                            const UWord& x) {
  return conj_n_impl(gcm, eps, f, i, x, true);
}

BElement b_identity(const RootDatum& datum) { return {UWord{}, TorusElement::identity(datum)}; }

BElement b_mul(const RootDatum& datum, const Field& f, const BElement& x, const BElement& y) {
  return {u_mul(f, x.u, conj_by_torus(datum, f, x.h, y.u)), torus_mul(f, x.h, y.h)};
}

BElement b_inv(const RootDatum& datum, const Field& f, const BElement& x) {
  const TorusElement hi = torus_inv(f, x.h);
  return {conj_by_torus(datum, f, hi, u_inv(f, x.u)), hi};
}

} // namespace kmlat
