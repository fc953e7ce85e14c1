#pragma once

#include "kmlat/error.hpp"
#include "kmlat/lattice_covol.hpp"

#include <functional>
#include <string>
#include <vector>

// Single-point corruptions of a graph-of-groups lattice, each paired with the
// admissibility check or error code that must catch it.
namespace mutations {

using kmlat::FiniteGroupTable;
using kmlat::GraphOfGroupsLattice;

// G x C_k with (g,j) encoded as g*k + j.
inline FiniteGroupTable times_cyclic(const FiniteGroupTable& g, int k) {
  const int n = g.size();
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n * k), std::vector<int>(static_cast<std::size_t>(n * k)));
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < k; ++i)
      for (int b = 0; b < n; ++b)
        for (int j = 0; j < k; ++j) t[a * k + i][b * k + j] = g.mul(a, b) * k + (i + j) % k;
  return FiniteGroupTable::make(std::move(t));
}

inline std::vector<int> lift(const std::vector<int>& into, int k) {
  std::vector<int> r;
  for (int x : into) r.push_back(x * k);
  return r;
}

struct Mutant {
  std::string name;
  std::string expect; // a failing admissibility check name, or an error code
  std::function<GraphOfGroupsLattice()> build;
};

inline std::vector<Mutant> all(const GraphOfGroupsLattice& lat, std::uint64_t p) {
  const auto A = lat.A(), B = lat.B();
  const auto ia = lat.into_A(), ib = lat.into_B();
  std::vector<Mutant> out;
  const int coprime = p == 2 ? 3 : 2;
  const int pk = static_cast<int>(p);
  out.push_back({"A x C" + std::to_string(coprime), "index_A",
                 [=] { return GraphOfGroupsLattice::make(times_cyclic(A, coprime), B, lift(ia, coprime), ib); }});
  out.push_back({"B x C" + std::to_string(coprime), "index_B",
                 [=] { return GraphOfGroupsLattice::make(A, times_cyclic(B, coprime), ia, lift(ib, coprime)); }});
  out.push_back({"A x C" + std::to_string(pk), "p_torsion_free_A",
                 [=] { return GraphOfGroupsLattice::make(times_cyclic(A, pk), B, lift(ia, pk), ib); }});
  out.push_back({"B x C" + std::to_string(pk), "p_torsion_free_B",
                 [=] { return GraphOfGroupsLattice::make(A, times_cyclic(B, pk), ia, lift(ib, pk)); }});
  if (ia.size() > 1) {
    out.push_back({"collapsed injection", "InvalidInjection", [=] {
                     auto bad = ia;
                     bad[1] = bad[0];
                     return GraphOfGroupsLattice::make(A, B, bad, ib);
                   }});
  } else {
    out.push_back({"identity not preserved", "InvalidInjection", [=] {
                     auto bad = ia;
                     bad[0] = (A.identity() + 1) % A.size();
                     return GraphOfGroupsLattice::make(A, B, bad, ib);
                   }});
  }
  if (A.size() > 1)
    out.push_back({"corrupted table", "InvalidGroupTable", [=] {
                   auto t = A.table();
                   std::swap(t[1][0], t[1][1]);
                   return GraphOfGroupsLattice::make(FiniteGroupTable::make(t), B, ia, ib);
                 }});
  return out;
}

// Returns true when the mutant is caught by the expected check or error.
inline bool detected(const Mutant& m, std::uint64_t q, std::uint64_t p) {
  try {
    const auto lat = m.build();
    const auto rep = kmlat::admissibility(lat, q, p);
    for (const auto& c : rep.checks)
      if (c.name == m.expect) return !c.pass;
    return false;
  } catch (const kmlat::Error& e) {
    return e.code() == m.expect;
  }
}

} // namespace mutations
