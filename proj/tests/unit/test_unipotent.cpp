#include "kmlat/error.hpp"
#include "kmlat/text_format.hpp"
#include "kmlat/unipotent.hpp"

#include <doctest.h>

using namespace kmlat;

namespace {

const Gcm kA2 = Gcm::make(-2, -2);
const Gcm kA3 = Gcm::make(-3, -3);

UWord x(const Gcm& g, Root r, Elem c) { return root_element(g, r, c); }

UWord w(const Field& f, std::initializer_list<UWord> parts) {
  UWord r;
  for (const auto& p : parts) r = u_mul(f, r, p);
  return r;
}

} // namespace

TEST_CASE("root group multiplication") {
  const Field f = Field::parse("5");
  CHECK(u_mul(f, x(kA2, {1, 0}, 1), x(kA2, {1, 0}, 2)) == x(kA2, {1, 0}, 3));
  const UWord a = w(f, {x(kA2, {1, 0}, 2), x(kA2, {0, 1}, 1)});
  const UWord b = w(f, {x(kA2, {0, 1}, 4), x(kA2, {1, 0}, 3)});
  CHECK(u_mul(f, a, b).identity());
  const UWord c = w(f, {x(kA2, {1, 0}, 1), x(kA2, {0, 1}, 1), x(kA2, {1, 0}, 1)});
  CHECK(u_mul(f, c, x(kA2, {1, 0}, 4)) == w(f, {x(kA2, {1, 0}, 1), x(kA2, {0, 1}, 1)}));
  CHECK(x(kA2, {1, 0}, 0).identity());
}

TEST_CASE("syllables collect roots of one side") {
  const Field f = Field::parse("3");
  const UWord u = w(f, {x(kA3, {1, 0}, 1), x(kA3, {3, 1}, 2), x(kA3, {8, 3}, 1)});
  REQUIRE(u.length() == 1);
  CHECK(u.syllables[0].side == 1);
  CHECK(u.syllables[0].coords.size() == 3);
  CHECK(root_side(kA3, Root{1, 3}) == 2);
  CHECK_THROWS_AS(root_element(kA3, Root{1, 1}, 1), Error);
  CHECK_THROWS_AS(root_element(kA3, Root{-1, 0}, 1), Error);
}

TEST_CASE("inverses and powers") {
  const Field f = Field::parse("4");
  const UWord u = w(f, {x(kA3, {1, 0}, 3), x(kA3, {0, 1}, 2), x(kA3, {3, 1}, 1), x(kA3, {1, 3}, 1)});
  CHECK(u_mul(f, u, u_inv(f, u)).identity());
  CHECK(u_mul(f, u_inv(f, u), u).identity());
  CHECK(u_pow(f, u, 0).identity());
  CHECK(u_pow(f, u, 3) == w(f, {u, u, u}));
}

TEST_CASE("torsion classification") {
  const Field f = Field::parse("5");
  CHECK(torsion_class(f, UWord{}).kind == TorsionKind::Identity);
  const UWord inf = w(f, {x(kA2, {1, 0}, 1), x(kA2, {0, 1}, 1)});
  const auto t = torsion_class(f, inf);
  CHECK(t.kind == TorsionKind::Infinite);
  CHECK(t.order == 0);
  for (std::uint64_t n = 1; n <= 20; ++n) CHECK(u_pow(f, inf, n).length() == 2 * n);

  const UWord conj = w(f, {x(kA2, {0, 1}, 3), x(kA2, {1, 0}, 2), x(kA2, {0, 1}, 2)});
  const auto c = torsion_class(f, conj);
  CHECK(c.kind == TorsionKind::PPowerInFactorConjugate);
  CHECK(c.order == 5);
  CHECK(c.conjugator == x(kA2, {0, 1}, 3));
  CHECK(c.core == x(kA2, {1, 0}, 2));
  CHECK(w(f, {c.conjugator, c.core, u_inv(f, c.conjugator)}) == conj);
  CHECK(u_pow(f, conj, 5).identity());
}

TEST_CASE("retraction and torus conjugation") {
  const Field f = Field::parse("7");
  const UWord u = w(f, {x(kA2, {1, 0}, 3), x(kA2, {0, 1}, 2), x(kA2, {1, 0}, 1), x(kA2, {2, 1}, 5)});
  CHECK(retraction(f, 1, u) == 4);
  CHECK(retraction(f, 2, u) == 2);
  const auto d = RootDatum::simply_connected(kA2);
  const TorusElement h{{3, 1}};
  const UWord v = conj_by_torus(d, f, h, x(kA2, {2, 1}, 1));
  CHECK(v == x(kA2, {2, 1}, char_eval(d, f, Root{2, 1}, h)));
}

TEST_CASE("conjugation by n_i") {
  const Field f = Field::parse("5");
  const EpsilonPair eps{-1, -1};
  // n_1 x_(3,1)(t) n_1^{-1} = x_(0,1)(eps_{1,(3,1)} t) = x_(0,1)(-t)
  const auto r = conj_by_n(kA3, eps, f, 1, x(kA3, {3, 1}, 2));
  REQUIRE(std::holds_alternative<UWord>(r));
  CHECK(std::get<UWord>(r) == x(kA3, {0, 1}, 3));
  CHECK(std::holds_alternative<NeedsSL2>(conj_by_n(kA3, eps, f, 1, x(kA3, {1, 0}, 1))));
  const UWord u = w(f, {x(kA3, {0, 1}, 1), x(kA3, {3, 1}, 4), x(kA3, {1, 3}, 2)});
  const auto there = std::get<UWord>(conj_by_n(kA3, eps, f, 1, u));
  CHECK(std::get<UWord>(conj_by_n_inv(kA3, eps, f, 1, there)) == u);
}

TEST_CASE("Borel products") {
  const Field f = Field::parse("5");
  const auto d = RootDatum::simply_connected(kA2);
  const BElement a{x(kA2, {1, 0}, 2), TorusElement{{2, 3}}};
  const BElement b{x(kA2, {0, 1}, 4), TorusElement{{4, 1}}};
  const BElement c{w(f, {x(kA2, {2, 1}, 1), x(kA2, {1, 2}, 3)}), TorusElement{{1, 2}}};
  CHECK(b_mul(d, f, b_mul(d, f, a, b), c) == b_mul(d, f, a, b_mul(d, f, b, c)));
  CHECK(b_mul(d, f, a, b_inv(d, f, a)) == b_identity(d));
}
