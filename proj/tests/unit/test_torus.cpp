#include "kmlat/error.hpp"
#include "kmlat/torus.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace kmlat;

TEST_CASE("character evaluation") {
  const auto d = RootDatum::simply_connected(Gcm::make(-2, -2));
  const Field f = Field::parse("5");
  CHECK(char_eval(d, f, 1, TorusElement{{2, 3}}) == 1);
  CHECK(char_eval(d, f, 1, TorusElement::identity(d)) == 1);
  for (Elem s = 1; s < 5; ++s)
    for (Elem t = 1; t < 5; ++t)
      CHECK(char_eval(d, f, 1, TorusElement{{t, s}}) == char_eval(d, f, 2, TorusElement{{s, t}}));
  CHECK(char_eval(d, f, Root{2, 1}, TorusElement{{2, 1}}) == f.mul(f.pow(char_eval(d, f, 1, TorusElement{{2, 1}}), 2),
                                                                      char_eval(d, f, 2, TorusElement{{2, 1}})));
  CHECK_THROWS_AS(validate(d, TorusElement{{0, 1}}), Error);
  CHECK_THROWS_AS(validate(d, TorusElement{{1}}), Error);
}

TEST_CASE("coroot images and the Weyl action") {
  const auto d = RootDatum::simply_connected(Gcm::make(-2, -3));
  const Field f = Field::parse("7");
  for (Elem c = 1; c < 7; ++c) {
    // alpha_i(h_i(c)) = c^2
    CHECK(char_eval(d, f, 1, coroot_torus(d, f, 1, c)) == f.mul(c, c));
    CHECK(char_eval(d, f, 2, coroot_torus(d, f, 2, c)) == f.mul(c, c));
    // alpha_j(h_i(c)) = c^{a_ij}
    CHECK(char_eval(d, f, 2, coroot_torus(d, f, 1, c)) == f.pow(c, -2));
  }
  // w_i is an involution on H
  for (Elem a = 1; a < 7; ++a)
    for (Elem b = 1; b < 7; ++b) {
      const TorusElement h{{a, b}};
      CHECK(weyl_act(d, f, 1, weyl_act(d, f, 1, h)) == h);
      // alpha(w_i h) = (w_i alpha)(h)
      CHECK(char_eval(d, f, 2, weyl_act(d, f, 1, h)) == char_eval(d, f, reflect(d.gcm(), 1, Root{0, 1}), h));
    }
}

TEST_CASE("center orders") {
  CHECK(center_order(RootDatum::simply_connected(Gcm::make(-2, -2)), Field::parse("5")) == 8);
  CHECK(center_order(RootDatum::simply_connected(Gcm::make(-2, -2)), Field::parse("4")) == 3);
  CHECK(center_order(RootDatum::simply_connected(Gcm::make(-2, -3)), Field::parse("2")) == 1);
  for (int a12 = -1; a12 >= -4; --a12)
    for (int a21 = -1; a21 >= -4; --a21)
      for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
        const auto d = RootDatum::simply_connected(Gcm::make(a12, a21));
        const Field f = Field::parse(std::to_string(q));
        const auto brute = center_order(d, f);
        CHECK(brute == center_order_snf(d, q));
        CHECK(brute == oracle::center_brute(oracle::Fq(f.p(), f.modulus()), a12, a21));
        const auto zs = center_elements(d, f);
        CHECK(zs.size() == brute);
        for (const auto& z : zs) {
          CHECK(char_eval(d, f, 1, z) == 1);
          CHECK(char_eval(d, f, 2, z) == 1);
        }
      }
}

TEST_CASE("center of a non simply connected datum") {
  // adjoint-type datum for 2,-2;-2,2 with Y = root lattice dual: pairings are the identity
  const auto d = RootDatum::make(Gcm::make(-2, -2), {{2, -2}, {-2, 2}}, {{1, 0}, {0, 1}});
  const Field f = Field::parse("5");
  CHECK(center_order(d, f) == 1);
  CHECK(center_order_snf(d, 5) == 1);
}
