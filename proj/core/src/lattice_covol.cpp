#include "kmlat/lattice_covol.hpp"

#include "kmlat/error.hpp"
#include "kmlat/ffield.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace kmlat {

namespace {

[[noreturn]] void bad_table(const std::string& msg) { throw Error(errc::invalid_group_table, msg); }
[[noreturn]] void bad_injection(const std::string& msg) { throw Error(errc::invalid_injection, msg); }

} // namespace

FiniteGroupTable FiniteGroupTable::make(std::vector<std::vector<int>> table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) bad_table("empty group table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) bad_table("group table is not square");
    for (int x : row)
      if (x < 0 || x >= n) bad_table("group table entry " + std::to_string(x) + " out of range");
  }
  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = table[a][x] == x && table[x][a] == x;
    if (ok) e = a;
  }
  if (e < 0) bad_table("group table has no identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          bad_table("group table is not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                    std::to_string(c) + ")");
  FiniteGroupTable g;
  g.inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table[a][b] == e && table[b][a] == e) g.inverse_[a] = b;
    if (g.inverse_[a] < 0) bad_table("element " + std::to_string(a) + " has no inverse");
  }
  g.table_ = std::move(table);
  g.identity_ = e;
  return g;
}

FiniteGroupTable FiniteGroupTable::cyclic(int n) {
  if (n <= 0) bad_table("cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return make(std::move(t));
}

FiniteGroupTable FiniteGroupTable::from_permutations(const std::vector<std::vector<int>>& gens) {
  if (gens.empty()) return cyclic(1);
  const std::size_t deg = gens.front().size();
  for (const auto& g : gens) {
    std::vector<int> s = g;
    std::sort(s.begin(), s.end());
    std::vector<int> id(deg);
    std::iota(id.begin(), id.end(), 0);
    if (s != id) bad_table("generator is not a permutation of 0.." + std::to_string(deg - 1));
  }
  auto compose = [&](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(deg);
    for (std::size_t x = 0; x < deg; ++x) r[x] = a[b[x]];
    return r;
  };
  std::vector<int> id(deg);
  std::iota(id.begin(), id.end(), 0);
  std::map<std::vector<int>, int> index{{id, 0}};
  std::vector<std::vector<int>> elems{id};
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (const auto& g : gens) {
      auto p = compose(g, elems[k]);
      if (index.try_emplace(p, static_cast<int>(elems.size())).second) elems.push_back(std::move(p));
    }
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = index.at(compose(elems[a], elems[b]));
  return make(std::move(t));
}

std::uint64_t FiniteGroupTable::order(int a) const {
  std::uint64_t k = 1;
  for (int x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroupTable::closed(const std::vector<int>& subset) const {
  const std::set<int> s(subset.begin(), subset.end());
  for (int a : s)
    for (int b : s)
      if (!s.contains(mul(a, b))) return false;
  return !s.empty();
}

TorsionWitness has_p_torsion(const FiniteGroupTable& g, std::uint64_t p) {
  for (int a = 0; a < g.size(); ++a)
    if (const auto o = g.order(a); o % p == 0) return {true, a, o};
  return {};
}

GraphOfGroupsLattice GraphOfGroupsLattice::make(FiniteGroupTable A, FiniteGroupTable B, std::vector<int> into_A,
                                                std::vector<int> into_B, std::vector<VertexOrbit> extra) {
  const std::size_t n = into_A.size();
  if (n == 0) bad_injection("edge group is empty");
  if (into_B.size() != n) bad_injection("into_A and into_B have different lengths");
  auto check = [&](const FiniteGroupTable& G, const std::vector<int>& m, const char* name) {
    for (int x : m)
      if (x < 0 || x >= G.size()) bad_injection(std::string(name) + " maps outside the vertex group");
    if (std::set<int>(m.begin(), m.end()).size() != n) bad_injection(std::string(name) + " is not injective");
    if (!G.closed(m)) bad_injection(std::string(name) + " image is not a subgroup");
  };
  check(A, into_A, "into_A");
  check(B, into_B, "into_B");
  std::map<int, int> preA, preB;
  for (std::size_t c = 0; c < n; ++c) {
    preA[into_A[c]] = static_cast<int>(c);
    preB[into_B[c]] = static_cast<int>(c);
  }
  for (std::size_t c1 = 0; c1 < n; ++c1)
    for (std::size_t c2 = 0; c2 < n; ++c2)
      if (preA.at(A.mul(into_A[c1], into_A[c2])) != preB.at(B.mul(into_B[c1], into_B[c2])))
        bad_injection("into_A and into_B induce different products on the edge group");
  for (const auto& o : extra)
    if (o.stabilizer_order == 0) bad_injection("orbit " + o.name + " has stabilizer order 0");
  return {std::move(A), std::move(B), std::move(into_A), std::move(into_B), std::move(extra)};
}

CovolumeReport covolume_report(const GraphOfGroupsLattice& lat) {
  CovolumeReport r;
  r.contributions.emplace_back("A", Rational(1, lat.A().size()));
  r.contributions.emplace_back("B", Rational(1, lat.B().size()));
  for (const auto& o : lat.extra_orbits())
    r.contributions.emplace_back(o.name, Rational(1, static_cast<long long>(o.stabilizer_order)));
  for (const auto& [name, v] : r.contributions) r.covolume += v;
  return r;
}

Rational covolume(const GraphOfGroupsLattice& lat) { return covolume_report(lat).covolume; }

Rational covolume(std::uint64_t order_a, std::uint64_t order_b) {
  if (order_a == 0 || order_b == 0) bad_table("vertex group order must be positive");
  return Rational(1, static_cast<long long>(order_a)) + Rational(1, static_cast<long long>(order_b));
}

bool AdmissibilityReport::pass() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

AdmissibilityReport admissibility(const GraphOfGroupsLattice& lat, std::uint64_t q, std::uint64_t p) {
  if (!is_prime(p)) throw Error(errc::not_prime, std::to_string(p) + " is not prime");
  AdmissibilityReport rep;
  const auto c = static_cast<std::uint64_t>(lat.edge_order());
  auto index_check = [&](const FiniteGroupTable& G, const char* name) {
    const auto n = static_cast<std::uint64_t>(G.size());
    const bool ok = n % c == 0 && n / c == q + 1;
    rep.checks.push_back({std::string("index_") + name, ok,
                          "|" + std::string(name) + ":C| = " + std::to_string(n) + "/" + std::to_string(c) +
                              ", need " + std::to_string(q + 1)});
  };
  auto torsion_check = [&](const FiniteGroupTable& G, const char* name) {
    const auto w = has_p_torsion(G, p);
    rep.checks.push_back({std::string("p_torsion_free_") + name, !w.found,
                          w.found ? "element " + std::to_string(w.element) + " has order " + std::to_string(w.order)
                                  : "no element of order divisible by " + std::to_string(p)});
  };
  index_check(lat.A(), "A");
  index_check(lat.B(), "B");
  torsion_check(lat.A(), "A");
  torsion_check(lat.B(), "B");
  return rep;
}

MinCovolValue min_covol_value(std::uint64_t q, std::uint64_t center_order, int delta) {
  if (delta != 1 && delta != 2 && delta != 4)
    throw Error(errc::bad_delta, "delta must be 1, 2 or 4, got " + std::to_string(delta));
  if (!prime_power(q)) throw Error(errc::not_prime_power, std::to_string(q) + " is not a prime power");
  if (center_order == 0) throw Error(errc::bad_root_datum, "center order must be positive");
  MinCovolValue r;
  r.value = Rational(2, static_cast<long long>((q + 1) * center_order * static_cast<std::uint64_t>(delta)));
  r.below_threshold = q < kMinCovolThreshold;
  if (r.below_threshold)
    r.warning = "q = " + std::to_string(q) + " < " + std::to_string(kMinCovolThreshold) +
                ": value computed, minimality not asserted";
  return r;
}

CrossCheckReport cross_check_covolume(const GraphOfGroupsLattice& lat, const GroupContext& ctx,
                                      const LatticeRealization& real, int R, std::size_t word_bound,
                                      Budget& budget) {
  CrossCheckReport rep;
  const Edge base;
  auto side = [&](const std::vector<GroupWord>& gens, int type, const FiniteGroupTable& G, const char* name) {
    const OrbitReport o = orbit_and_stabilizers(ctx, gens, R, word_bound, budget);
    const auto vstab = o.vertex_stabilizer_of(vertex_of(base, type));
    const auto estab = o.edge_stabilizer_of(base);
    rep.rows.push_back({std::string("vertex ") + name, Rational(1, G.size()),
                        Rational(1, static_cast<long long>(vstab))});
    rep.rows.push_back({std::string("edge in ") + name, Rational(1, lat.edge_order()),
                        Rational(1, static_cast<long long>(estab))});
    rep.table_total += Rational(1, G.size());
    rep.census_total += Rational(1, static_cast<long long>(vstab));
    if (o.group_order != vstab)
      rep.discrepancy += std::string(name) + " does not fix the base vertex of type " + std::to_string(type) + "; ";
  };
  side(real.gens_A, 1, lat.A(), "A");
  side(real.gens_B, 2, lat.B(), "B");
  for (const auto& row : rep.rows)
    if (row.table_side != row.census_side)
      rep.discrepancy += row.orbit + ": table " + to_string(row.table_side) + " vs census " +
                         to_string(row.census_side) + "; ";
  rep.agree = rep.discrepancy.empty();
  return rep;
}

namespace {

using nlohmann::json;

FiniteGroupTable table_from_json(const json& j, const char* what) {
  const auto table = j.at("table").get<std::vector<std::vector<int>>>();
  if (j.contains("order") && j.at("order").get<std::size_t>() != table.size())
    bad_table(std::string(what) + ": order does not match table size");
  return FiniteGroupTable::make(table);
}

} // namespace

GraphOfGroupsLattice parse_lattice_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(errc::parse_error, std::string("lattice JSON: ") + e.what());
  }
  try {
    const auto& vg = j.at("vertex_groups");
    if (!vg.is_array() || vg.size() != 2) throw Error(errc::parse_error, "lattice JSON: need exactly two vertex_groups");
    auto A = table_from_json(vg[0], "vertex group A");
    auto B = table_from_json(vg[1], "vertex group B");
    const auto& eg = j.at("edge_group");
    auto ia = eg.at("into_A").get<std::vector<int>>();
    auto ib = eg.at("into_B").get<std::vector<int>>();
    if (eg.contains("order") && eg.at("order").get<std::size_t>() != ia.size())
      bad_injection("edge_group order does not match into_A");
    std::vector<VertexOrbit> extra;
    if (j.contains("extra_orbits"))
      for (const auto& o : j.at("extra_orbits"))
        extra.push_back({o.at("name").get<std::string>(), o.at("stabilizer_order").get<std::uint64_t>()});
    return GraphOfGroupsLattice::make(std::move(A), std::move(B), std::move(ia), std::move(ib), std::move(extra));
  } catch (const json::exception& e) {
    throw Error(errc::parse_error, std::string("lattice JSON: ") + e.what());
  }
}

std::string lattice_to_json(const GraphOfGroupsLattice& lat) {
  json j;
  for (const auto* G : {&lat.A(), &lat.B()}) j["vertex_groups"].push_back({{"order", G->size()}, {"table", G->table()}});
  j["edge_group"] = {{"order", lat.edge_order()}, {"into_A", lat.into_A()}, {"into_B", lat.into_B()}};
  for (const auto& o : lat.extra_orbits())
    j["extra_orbits"].push_back({{"name", o.name}, {"stabilizer_order", o.stabilizer_order}});
  return j.dump();
}

} // namespace kmlat
