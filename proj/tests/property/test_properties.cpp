#include "kmlat/laurent.hpp"
#include "kmlat/lie_signs.hpp"
#include "kmlat/root_datum.hpp"
#include "kmlat/tree_engine.hpp"
#include "kmlat/unipotent.hpp"
#include "random_words.hpp"

#include <doctest.h>

using namespace kmlat;

namespace {

using namespace randgen;

Gen gen(20261016);

LieVector combine(const LieVector& a, const LieVector& b, const LieVector& c) {
  LieVector r = a;
  for (const auto* v : {&b, &c})
    for (const auto& [k, x] : *v) {
      r[k] += x;
      if (r[k] == 0) r.erase(k);
    }
  return r;
}

} // namespace

TEST_CASE("unipotent associativity and inverses") {
  int cases = 0;
  for (auto [a12, a21] : {std::pair{-2, -2}, {-3, -3}, {-2, -4}, {-3, -5}})
    for (const char* q : {"2", "3", "4", "5", "7"}) {
      const Gcm g = Gcm::make(a12, a21);
      const Field f = Field::parse(q);
      const auto roots = real_roots(g, 4);
      for (int k = 0; k < 60; ++k) {
        const UWord x = gen.uword(g, f, roots, gen.uniform(0, 4));
        const UWord y = gen.uword(g, f, roots, gen.uniform(0, 4));
        const UWord z = gen.uword(g, f, roots, gen.uniform(0, 4));
        CHECK(u_mul(f, u_mul(f, x, y), z) == u_mul(f, x, u_mul(f, y, z)));
        CHECK(u_mul(f, x, u_inv(f, x)).identity());
        CHECK(u_mul(f, u_inv(f, x), x).identity());
        ++cases;
      }
    }
  CHECK(cases >= 1000);
}

TEST_CASE("retractions are homomorphisms") {
  int cases = 0;
  for (auto [a12, a21] : {std::pair{-2, -2}, {-3, -3}, {-4, -2}})
    for (const char* q : {"3", "8", "9", "11"}) {
      const Gcm g = Gcm::make(a12, a21);
      const Field f = Field::parse(q);
      const auto roots = real_roots(g, 4);
      for (int k = 0; k < 50; ++k) {
        const UWord x = gen.uword(g, f, roots, gen.uniform(0, 5));
        const UWord y = gen.uword(g, f, roots, gen.uniform(0, 5));
        for (int i = 1; i <= 2; ++i)
          CHECK(retraction(f, i, u_mul(f, x, y)) == f.add(retraction(f, i, x), retraction(f, i, y)));
        ++cases;
      }
    }
  CHECK(cases >= 500);
}

TEST_CASE("Jacobi identity in the truncated algebra") {
  int triples = 0;
  for (auto [a12, a21] : {std::pair{-2, -2}, {-3, -3}, {-2, -3}}) {
    const Gcm g = Gcm::make(a12, a21);
    const auto alg = build_truncated_algebra(g, min_height(g) + 3);
    const int n = static_cast<int>(alg.size());
    int attempts = 0;
    int here = 0;
    while (here < 200 && attempts < 20000) {
      ++attempts;
      const int a = gen.uniform(0, n - 1), b = gen.uniform(0, n - 1), c = gen.uniform(0, n - 1);
      const auto bc = alg.bracket(b, c), ca = alg.bracket(c, a), ab = alg.bracket(a, b);
      if (!bc.exact || !ca.exact || !ab.exact) continue;
      const auto t1 = alg.bracket(TruncatedKMAlgebra::unit(a), bc.value);
      const auto t2 = alg.bracket(TruncatedKMAlgebra::unit(b), ca.value);
      const auto t3 = alg.bracket(TruncatedKMAlgebra::unit(c), ab.value);
      if (!t1.exact || !t2.exact || !t3.exact) continue;
      CHECK(combine(t1.value, t2.value, t3.value).empty());
      ++here;
    }
    triples += here;
  }
  CHECK(triples >= 500);
}

TEST_CASE("characters are multiplicative") {
  int pairs = 0;
  for (auto [a12, a21] : {std::pair{-2, -2}, {-3, -2}, {-5, -3}})
    for (const char* q : {"5", "7", "9", "16"}) {
      const auto ctx = context(a12, a21, q);
      const Field& f = ctx.field;
      const auto roots = real_roots(ctx.gcm(), 3);
      for (int k = 0; k < 20; ++k) {
        const auto h1 = gen.torus(ctx), h2 = gen.torus(ctx);
        const Root b = gen.pick(roots);
        const Root c = gen.pick(roots);
        CHECK(char_eval(ctx.datum, f, b, torus_mul(f, h1, h2)) ==
              f.mul(char_eval(ctx.datum, f, b, h1), char_eval(ctx.datum, f, b, h2)));
        CHECK(char_eval(ctx.datum, f, b + c, h1) == f.mul(char_eval(ctx.datum, f, b, h1), char_eval(ctx.datum, f, c, h1)));
        ++pairs;
      }
    }
  CHECK(pairs >= 200);
}

TEST_CASE("action axioms") {
  int cases = 0;
  for (auto [a12, a21] : {std::pair{-2, -2}, {-3, -3}, {-2, -3}})
    for (const char* q : {"2", "3", "4", "5"}) {
      const auto ctx = context(a12, a21, q);
      const auto roots = real_roots(ctx.gcm(), 3);
      Budget budget;
      for (int k = 0; k < 45; ++k) {
        const GroupWord w1 = gen.word(ctx, roots, gen.uniform(0, 4));
        const GroupWord w2 = gen.word(ctx, roots, gen.uniform(0, 4));
        const GroupWord w12 = concat(w1, w2);
        const Edge e = gen.edge(ctx.field, 4);
        CHECK(act(ctx, GroupWord{}, e, budget) == e);
        const Edge img = act(ctx, w12, e, budget);
        CHECK(img == act(ctx, w1, act(ctx, w2, e, budget), budget));
        CHECK(act(ctx, inverse(ctx, w12), img, budget) == e);
        CHECK(act(ctx, evaluate(ctx, w12, budget), e, budget) == img);
        if (ctx.gcm().affine())
          CHECK(oracle_edge(ctx, lm_mul(ctx.field, oracle_embed(ctx, w12), gallery_matrix(ctx, e))) == img);
        ++cases;
      }
    }
  CHECK(cases >= 500);
}
