#include "kmlat/error.hpp"
#include "kmlat/lattice_covol.hpp"
#include "kmlat/lie_signs.hpp"
#include "kmlat/text_format.hpp"
#include "fixtures.hpp"
#include "mutations.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace kmlat;

namespace {

std::string code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

Rational frac(long a, long b) { return Rational(a) / b; }

GroupContext context(const std::string& q) {
  const Gcm g = Gcm::make(-2, -2);
  return {RootDatum::simply_connected(g), Field::parse(q), epsilon_pair(g).eps};
}

LatticeRealization realization(const GroupContext& ctx, const nlohmann::json& j) {
  LatticeRealization r;
  for (const auto& s : j["realization"]["gens_A"]) r.gens_A.push_back(parse_word(ctx, s.get<std::string>()));
  for (const auto& s : j["realization"]["gens_B"]) r.gens_B.push_back(parse_word(ctx, s.get<std::string>()));
  return r;
}

} // namespace

TEST_CASE("group tables") {
  const auto c6 = FiniteGroupTable::cyclic(6);
  CHECK(c6.size() == 6);
  CHECK(c6.order(1) == 6);
  CHECK(c6.order(2) == 3);
  CHECK(c6.inverse(1) == 5);
  CHECK(c6.closed({0, 2, 4}));
  CHECK_FALSE(c6.closed({0, 1}));
  const auto s3 = FiniteGroupTable::from_permutations({{1, 0, 2}, {1, 2, 0}});
  CHECK(s3.size() == 6);
  CHECK(code_of([] { FiniteGroupTable::make({{0, 1}, {1, 1}}); }) == "InvalidGroupTable");
  CHECK(code_of([] { FiniteGroupTable::make({{0, 1}, {1}}); }) == "InvalidGroupTable");
  CHECK(code_of([] { FiniteGroupTable::make({{0, 2}, {2, 0}}); }) == "InvalidGroupTable");
  // a Latin square that is not associative
  CHECK(code_of([] {
          FiniteGroupTable::make({{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}});
        }) == "InvalidGroupTable");
}

TEST_CASE("torsion against Cauchy") {
  CHECK(has_p_torsion(FiniteGroupTable::cyclic(6), 2).found);
  CHECK_FALSE(has_p_torsion(FiniteGroupTable::cyclic(3), 2).found);
  const auto s3 = FiniteGroupTable::from_permutations({{1, 0, 2}, {1, 2, 0}});
  const auto w = has_p_torsion(s3, 3);
  CHECK(w.found);
  CHECK(s3.order(w.element) == 3);
  int groups = 0;
  for (const auto& g : fixtures::json("groups.json")) {
    const auto t = g["table"].get<std::vector<std::vector<int>>>();
    const auto tab = FiniteGroupTable::make(t);
    const auto orders = oracle::element_orders(t);
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23}) {
      CHECK(has_p_torsion(tab, p).found == oracle::cauchy(t.size(), p));
      for (int a = 0; a < tab.size(); ++a) CHECK(tab.order(a) == orders[a]);
    }
    ++groups;
  }
  CHECK(groups >= 50);
}

TEST_CASE("covolume") {
  CHECK(covolume(6, 4) == frac(5, 12));
  CHECK(covolume(3, 3) == frac(2, 3));
  CHECK(covolume(1, 1) == 2);
  const auto c6 = FiniteGroupTable::cyclic(6);
  const auto lat = GraphOfGroupsLattice::make(c6, c6, {0, 3}, {0, 3}, {{"extra", 4}});
  const auto rep = covolume_report(lat);
  CHECK(rep.covolume == frac(1, 3) + frac(1, 4));
  CHECK(rep.contributions.size() == 3);
  CHECK(code_of([] { covolume(0, 2); }) == "InvalidGroupTable");
}

TEST_CASE("injections") {
  const auto c6 = FiniteGroupTable::cyclic(6), c4 = FiniteGroupTable::cyclic(4);
  CHECK(code_of([&] { GraphOfGroupsLattice::make(c6, c6, {0, 3}, {0, 0}); }) == "InvalidInjection");
  CHECK(code_of([&] { GraphOfGroupsLattice::make(c6, c6, {0, 2}, {0, 2}); }) == "InvalidInjection");
  CHECK(code_of([&] { GraphOfGroupsLattice::make(c6, c4, {0, 3}, {0}); }) == "InvalidInjection");
  CHECK_NOTHROW(GraphOfGroupsLattice::make(c6, c4, {0, 3}, {0, 2}));
}

TEST_CASE("admissibility fixtures") {
  int seen = 0;
  for (const auto& f : fixtures::json("lattices.json")) {
    const auto lat = parse_lattice_json(f["lattice"].dump());
    const auto q = f["q"].get<std::uint64_t>(), p = f["p"].get<std::uint64_t>();
    INFO(f["name"].get<std::string>());
    const bool expected = f["admissible"].get<bool>();
    CHECK(admissibility(lat, q, p).pass() == expected);
    // p-torsion agrees with divisibility of the vertex group orders
    const bool coprime = lat.A().size() % p != 0 && lat.B().size() % p != 0;
    const auto rep = admissibility(lat, q, p);
    for (const auto& c : rep.checks)
      if (c.name.starts_with("p_torsion")) CHECK((c.pass || !coprime));
    if (expected) {
      for (const auto& m : mutations::all(lat, p)) {
        INFO(m.name);
        CHECK(mutations::detected(m, q, p));
      }
    }
    ++seen;
  }
  CHECK(seen == 20);
  const auto c3 = FiniteGroupTable::cyclic(3);
  CHECK(code_of([&] { admissibility(GraphOfGroupsLattice::make(c3, c3, {0}, {0}), 2, 4); }) == "NotPrime");
}

TEST_CASE("minimal covolume") {
  const auto big = min_covol_value(521, 1040, 1);
  CHECK(big.value == frac(1, 271440));
  CHECK_FALSE(big.below_threshold);
  CHECK(big.warning.empty());
  const auto small = min_covol_value(5, 4, 1);
  CHECK(small.value == frac(1, 12));
  CHECK(small.below_threshold);
  CHECK_FALSE(small.warning.empty());
  CHECK(min_covol_value(2, 1, 2).value == frac(1, 3));
  CHECK(min_covol_value(509, 1, 1).below_threshold);
  CHECK(min_covol_value(512, 1, 1).below_threshold);
  CHECK_FALSE(min_covol_value(521, 1, 1).below_threshold);
  CHECK(code_of([] { min_covol_value(5, 1, 3); }) == "BadDelta");
  CHECK(code_of([] { min_covol_value(6, 1, 1); }) == "NotPrimePower");
  CHECK(code_of([] { min_covol_value(5, 0, 1); }) == "BadRootDatum");
}

TEST_CASE("json round trip") {
  const auto s3 = FiniteGroupTable::from_permutations({{1, 0, 2}, {1, 2, 0}});
  int inv = 0;
  while (s3.order(inv) != 2) ++inv;
  const auto lat = GraphOfGroupsLattice::make(s3, s3, {s3.identity(), inv}, {s3.identity(), inv}, {{"v", 2}});
  const auto back = parse_lattice_json(lattice_to_json(lat));
  CHECK(back.A().table() == lat.A().table());
  CHECK(back.into_B() == lat.into_B());
  CHECK(back.extra_orbits().size() == 1);
  CHECK(covolume(back) == covolume(lat));
  CHECK(code_of([] { parse_lattice_json("{"); }) == "ParseError");
  CHECK(code_of([] { parse_lattice_json(R"({"vertex_groups":[]})"); }) == "ParseError");
}

TEST_CASE("cross-check against the tree census") {
  const auto ctx = context("2");
  Budget budget;
  SUBCASE("trivial groups") {
    const auto one = FiniteGroupTable::cyclic(1);
    const auto rep =
        cross_check_covolume(GraphOfGroupsLattice::make(one, one, {0}, {0}), ctx, {}, 2, 8, budget);
    CHECK(rep.agree);
    CHECK(rep.census_total == 2);
  }
  for (const auto& [name, value] :
       std::vector<std::pair<std::string, Rational>>{{"lattice_c3_q2.json", frac(2, 3)}, {"lattice_s3_q2.json", frac(1, 3)}}) {
    INFO(name);
    const auto j = fixtures::json(name);
    const auto lat = parse_lattice_json(j.dump());
    const auto rep = cross_check_covolume(lat, ctx, realization(ctx, j), 2, 16, budget);
    CHECK(rep.agree);
    CHECK(rep.table_total == value);
    CHECK(rep.census_total == value);
  }
  const auto j = fixtures::json("lattice_mismatch_q2.json");
  const auto rep = cross_check_covolume(parse_lattice_json(j.dump()), ctx, realization(ctx, j), 2, 16, budget);
  CHECK_FALSE(rep.agree);
  CHECK_FALSE(rep.discrepancy.empty());
}
