#pragma once

#include "kmlat/rational.hpp"
#include "kmlat/tree_engine.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace kmlat {

/// Finite group given by its multiplication table, elements 0 .. n-1.
class FiniteGroupTable {
public:
  /// Validates closure, identity, inverses and associativity; throws
  /// InvalidGroupTable.
  static FiniteGroupTable make(std::vector<std::vector<int>> table);
  static FiniteGroupTable cyclic(int n);
  /// Closure of permutations of {0 .. degree-1} (composition: (ab)(x) = a(b(x))).
  static FiniteGroupTable from_permutations(const std::vector<std::vector<int>>& gens);

  int size() const noexcept { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_.at(a).at(b); }
  int identity() const noexcept { return identity_; }
  int inverse(int a) const { return inverse_.at(a); }
  std::uint64_t order(int a) const;
  const std::vector<std::vector<int>>& table() const noexcept { return table_; }

  /// True iff `subset` is closed under multiplication (hence a subgroup).
  bool closed(const std::vector<int>& subset) const;

private:
  FiniteGroupTable() = default;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

struct TorsionWitness {
  bool found = false;
  int element = -1;
  std::uint64_t order = 1;
};

/// An element of order divisible by p, if any.
TorsionWitness has_p_torsion(const FiniteGroupTable& g, std::uint64_t p);

/// A vertex orbit beyond the two of an edge-transitive lattice.
struct VertexOrbit {
  std::string name;
  std::uint64_t stabilizer_order = 1;
};

/// Amalgam data A *_C B (one edge orbit, two vertex orbits) with optional
/// further vertex orbits for non edge-transitive quotients.
class GraphOfGroupsLattice {
public:
  /// into_A[c], into_B[c]: images of the edge-group element c. Both maps must
  /// be injective, land on subgroups and induce the same group law on C;
  /// otherwise InvalidInjection.
  static GraphOfGroupsLattice make(FiniteGroupTable A, FiniteGroupTable B, std::vector<int> into_A,
                                   std::vector<int> into_B, std::vector<VertexOrbit> extra = {});

  const FiniteGroupTable& A() const noexcept { return a_; }
  const FiniteGroupTable& B() const noexcept { return b_; }
  int edge_order() const noexcept { return static_cast<int>(into_a_.size()); }
  const std::vector<int>& into_A() const noexcept { return into_a_; }
  const std::vector<int>& into_B() const noexcept { return into_b_; }
  const std::vector<VertexOrbit>& extra_orbits() const noexcept { return extra_; }

private:
  GraphOfGroupsLattice(FiniteGroupTable a, FiniteGroupTable b, std::vector<int> ia, std::vector<int> ib,
                       std::vector<VertexOrbit> extra)
    : a_(std::move(a)), b_(std::move(b)), into_a_(std::move(ia)), into_b_(std::move(ib)), extra_(std::move(extra)) {}

  FiniteGroupTable a_, b_;
  std::vector<int> into_a_, into_b_;
  std::vector<VertexOrbit> extra_;
};

struct CovolumeReport {
  Rational covolume;
  /// (orbit name, 1/|stabilizer|)
  std::vector<std::pair<std::string, Rational>> contributions;
};

CovolumeReport covolume_report(const GraphOfGroupsLattice& lat);
Rational covolume(const GraphOfGroupsLattice& lat);
/// 1/|A| + 1/|B|.
Rational covolume(std::uint64_t order_a, std::uint64_t order_b);

struct AdmissibilityCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct AdmissibilityReport {
  std::vector<AdmissibilityCheck> checks;
  bool pass() const noexcept;
};

/// |A:C| = |B:C| = q+1 and no element of order divisible by p in A or B.
AdmissibilityReport admissibility(const GraphOfGroupsLattice& lat, std::uint64_t q, std::uint64_t p);

/// Below this q the minimality of the value is not claimed (a warning, not an error).
inline constexpr std::uint64_t kMinCovolThreshold = 514;

struct MinCovolValue {
  Rational value;
  bool below_threshold = false;
  std::string warning;
};

/// 2 / ((q+1) |Z| delta). Throws BadDelta unless delta is 1, 2 or 4, and
/// NotPrimePower for bad q.
MinCovolValue min_covol_value(std::uint64_t q, std::uint64_t center_order, int delta);

struct CrossCheckRow {
  std::string orbit;
  Rational table_side;
  Rational census_side;
};

/// Realization of the vertex groups inside G(F_q): A = <gens_A> should fix
/// the base vertex of type 1, B = <gens_B> the base vertex of type 2.
struct LatticeRealization {
  std::vector<GroupWord> gens_A;
  std::vector<GroupWord> gens_B;
};

struct CrossCheckReport {
  std::vector<CrossCheckRow> rows;
  Rational table_total;
  Rational census_total;
  bool agree = false;
  std::string discrepancy;
};

/// Compares the table side (1/|A| + 1/|B|, |C|) with a stabilizer census:
/// each generated group is enumerated, its stabilizers of the base vertex and
/// base edge are counted on ball(R), and 1/|stab(base vertex)| is summed.
CrossCheckReport cross_check_covolume(const GraphOfGroupsLattice& lat, const GroupContext& ctx,
                                      const LatticeRealization& real, int R, std::size_t word_bound,
                                      Budget& budget);

/// Lattice file: {"vertex_groups": [{"order", "table"}, {...}],
///                "edge_group": {"order", "into_A", "into_B"},
///                "extra_orbits": [{"name", "stabilizer_order"}] (optional)}.
/// Throws ParseError, InvalidGroupTable or InvalidInjection.
GraphOfGroupsLattice parse_lattice_json(const std::string& text);
std::string lattice_to_json(const GraphOfGroupsLattice& lat);

} // namespace kmlat
