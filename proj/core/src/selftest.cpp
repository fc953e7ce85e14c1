#include "kmlat/selftest.hpp"

#include "kmlat/laurent.hpp"
#include "kmlat/lattice_covol.hpp"
#include "kmlat/lie_signs.hpp"
#include "kmlat/text_format.hpp"

#include <chrono>
#include <functional>
#include <random>

namespace kmlat {

namespace {

using Check = std::function<std::string()>; // empty string on success

SelfTestResult timed(const std::string& name, const Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  SelfTestResult r{name, false, "", 0};
  try {
    r.detail = c();
    r.pass = r.detail.empty();
    if (r.pass) r.detail = "ok";
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

GroupContext affine_context(std::uint32_t q) {
  const Gcm g = Gcm::make(-2, -2);
  return {RootDatum::simply_connected(g), Field::parse(std::to_string(q)), EpsilonPair{1, 1}};
}

std::vector<Atom> affine_atoms(const GroupContext& ctx) {
  const Field& f = ctx.field;
  std::vector<Atom> atoms{NAtom{1}, NAtom{2}};
  for (Root r : {Root{1, 0}, Root{0, 1}, Root{-1, 0}, Root{0, -1}, Root{2, 1}, Root{-1, -2}})
    for (Elem c = 1; c < f.q(); ++c) atoms.push_back(XAtom{r, c});
  for (Elem a = 1; a < f.q(); ++a) atoms.push_back(HAtom{TorusElement{{a, 1}}});
  return atoms;
}

std::string check_roots() {
  for (int m = 2; m <= 5; ++m) {
    const auto r = positive_roots(Gcm::make(-m, -m), 1, 12);
    for (std::size_t n = 1; n + 1 < r.size(); ++n)
      if (r[n + 1].k1 != m * r[n].k1 - r[n - 1].k1) return "recurrence fails for m=" + std::to_string(m);
  }
  return {};
}

std::string check_signs() {
  if (epsilon_pair(Gcm::make(-2, -2)).eps != EpsilonPair{1, 1}) return "sym -2 is not (+1,+1)";
  if (epsilon_pair(Gcm::make(-3, -3)).eps != EpsilonPair{-1, -1}) return "sym -3 is not (-1,-1)";
  return {};
}

std::string check_unipotent() {
  const Gcm g = Gcm::make(-3, -3);
  const Field f = Field::parse("4");
  std::vector<Root> roots;
  for (int side = 1; side <= 2; ++side)
    for (Root r : positive_roots(g, side, 3)) roots.push_back(r);
  std::mt19937_64 rng(7);
  auto random_word = [&] {
    std::vector<Syllable> syl;
    const int n = static_cast<int>(rng() % 5);
    for (int k = 0; k < n; ++k) {
      const Root r = roots[rng() % roots.size()];
      syl.push_back(Syllable{root_side(g, r), {{r, static_cast<Elem>(rng() % f.q())}}});
    }
    return normalize(f, std::move(syl));
  };
  for (int t = 0; t < 200; ++t) {
    const UWord x = random_word(), y = random_word(), z = random_word();
    if (u_mul(f, u_mul(f, x, y), z) != u_mul(f, x, u_mul(f, y, z))) return "associativity fails";
    if (!u_mul(f, x, u_inv(f, x)).identity()) return "inverse fails";
  }
  return {};
}

std::string check_engine_vs_oracle() {
  for (std::uint32_t q : {2u, 3u}) {
    const auto ctx = affine_context(q);
    Budget budget(Budget::kDefault * 100);
    for (const auto& a : affine_atoms(ctx))
      for (const auto& e : ball(q, 2))
        if (act(ctx, GroupWord{a}, e, budget) != oracle_act(ctx, GroupWord{a}, e))
          return "q=" + std::to_string(q) + " " + format_atom(a) + " on " + format_edge(e);
  }
  return {};
}

std::string check_star_actions() {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const auto ctx = affine_context(q);
    for (int type = 1; type <= 2; ++type)
      for (const auto& a : affine_atoms(ctx)) {
        const auto* n = std::get_if<NAtom>(&a);
        const auto* x = std::get_if<XAtom>(&a);
        if ((n && n->i != type) || (x && x->root.negative() && x->root != -Root::simple(type))) continue;
        for (const auto& c : projective_line(ctx.field)) {
          const Edge e = c.infinite ? Edge{} : Edge{{GalleryStep{type, c.c}}};
          const ProjPoint img = local_action(ctx, a, type, c);
          const Edge expect = oracle_act(ctx, GroupWord{a}, e);
          const Edge got = img.infinite ? Edge{} : Edge{{GalleryStep{type, img.c}}};
          if (got != expect) return "q=" + std::to_string(q) + " " + format_atom(a) + " at " + c.str();
        }
      }
  }
  return {};
}

std::string check_covolume() {
  if (covolume(6, 4) != Rational(5, 12)) return "1/6 + 1/4 != 5/12";
  const auto lat = GraphOfGroupsLattice::make(FiniteGroupTable::cyclic(3), FiniteGroupTable::cyclic(3), {0}, {0});
  const auto ctx = affine_context(2);
  const LatticeRealization real{{parse_word(ctx, "x(1,0;1) n(1)")}, {parse_word(ctx, "x(0,1;1) n(2)")}};
  Budget budget;
  const auto rep = cross_check_covolume(lat, ctx, real, 2, 8, budget);
  if (!rep.agree) return rep.discrepancy;
  if (!admissibility(lat, 2, 2).pass()) return "C3 *_1 C3 at q=2 not admissible";
  return {};
}

std::string check_center() {
  const auto datum = RootDatum::simply_connected(Gcm::make(-2, -2));
  const Field f = Field::parse("521");
  const auto brute = center_order(datum, f);
  const auto snf = center_order_snf(datum, 521);
  if (brute != 1040 || snf != 1040) return "|Z| brute " + std::to_string(brute) + ", snf " + std::to_string(snf);
  if (min_covol_value(521, brute, 1).value != Rational(1, 271440)) return "min covolume value at q=521";
  return {};
}

std::string check_witness() {
  for (int m : {2, 3}) {
    const auto w = sum_of_roots_witness(Gcm::make(-1, -m));
    if (!w.identity_holds || (w.sum_class != RootClass::Pos1 && w.sum_class != RootClass::Pos2))
      return "witness fails for (-1,-" + std::to_string(m) + ")";
  }
  return {};
}

} // namespace

std::vector<SelfTestResult> run_selftest() {
  return {
      timed("root recurrences", check_roots),
      timed("epsilon signs", check_signs),
      timed("unipotent group laws", check_unipotent),
      timed("engine vs matrix oracle on ball(2)", check_engine_vs_oracle),
      timed("star actions vs matrix oracle", check_star_actions),
      timed("covolume and cross-check", check_covolume),
      timed("center order and minimal covolume", check_center),
      timed("sum-of-roots witness", check_witness),
  };
}

} // namespace kmlat
