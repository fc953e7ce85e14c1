#pragma once

#include "kmlat/ffield.hpp"
#include "kmlat/root_datum.hpp"
#include "kmlat/torus.hpp"
#include "kmlat/unipotent.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace kmlat {

/// One letter x_i(t) n_i of a gallery word.
struct GalleryStep {
  int type = 1;
  Elem t = 0;

  friend auto operator<=>(const GalleryStep&, const GalleryStep&) = default;
};

/// The edge x_{i1}(t1) n_{i1} ... x_{il}(tl) n_{il} B; the empty gallery is the
/// base edge B. Types alternate.
struct Edge {
  std::vector<GalleryStep> steps;

  std::size_t length() const noexcept { return steps.size(); }
  bool base() const noexcept { return steps.empty(); }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Throws ParseError unless types alternate and lie in {1,2} and t < q.
void validate(const Field& f, const Edge& e);

/// Vertex of type `type` of the edge `edge`, in canonical form: the edge
/// never ends with a step of type `type` (such a step fixes the vertex).
struct Vertex {
  Edge edge;
  int type = 1;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

Vertex vertex_of(const Edge& e, int type);

/// x_alpha(c) for any real root alpha (positive or negative).
struct XAtom {
  Root root;
  Elem c = 0;
  friend bool operator==(const XAtom&, const XAtom&) = default;
};
/// n_i = n_{alpha_i}(1).
struct NAtom {
  int i = 1;
  friend bool operator==(const NAtom&, const NAtom&) = default;
};
struct HAtom {
  TorusElement h;
  friend bool operator==(const HAtom&, const HAtom&) = default;
};

using Atom = std::variant<XAtom, NAtom, HAtom>;
/// Product of atoms, leftmost first; acts on the tree from the rightmost atom.
using GroupWord = std::vector<Atom>;

/// Everything the group layer needs: the root datum, the field and the signs
/// (eps1, eps2) of the commutation relations.
struct GroupContext {
  RootDatum datum;
  Field field;
  EpsilonPair eps;

  const Gcm& gcm() const noexcept { return datum.gcm(); }
};

/// Counts carry steps; throws NormalizationBudgetExceeded past the limit.
class Budget {
public:
  static constexpr std::uint64_t kDefault = 1'000'000;

  explicit Budget(std::uint64_t limit = kDefault) : limit_(limit) {}

  void charge(std::uint64_t n = 1);
  std::uint64_t used() const noexcept { return used_; }
  std::uint64_t limit() const noexcept { return limit_; }

private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

/// Throws NotRealRoot, BadRootDatum, ParseError or std::domain_error for
/// malformed atoms.
void validate(const GroupContext& ctx, const Atom& a);

/// Rewrites a negative-root atom as n-, h- and positive-root atoms:
/// x_{-gamma}(s) = N x_{alpha_j}(c s) N^{-1}. Other atoms are returned as is.
GroupWord expand_atom(const GroupContext& ctx, const Atom& a);

struct CarryResult {
  GalleryStep step;
  BElement residue;
};

/// b x_i(t) n_i = x_i(t') n_i b'.
CarryResult carry(const GroupContext& ctx, const BElement& b, GalleryStep step, Budget& budget);

/// b G(e) = G(e') b', one carry per step.
std::pair<Edge, BElement> act_b(const GroupContext& ctx, const BElement& b, const Edge& e, Budget& budget);

/// Exact normal form g = G(edge) b of a group element.
struct GroupElement {
  Edge edge;
  BElement b;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

GroupElement group_identity(const GroupContext& ctx);
GroupElement left_mul(const GroupContext& ctx, const Atom& a, const GroupElement& g, Budget& budget);
GroupElement left_mul(const GroupContext& ctx, const GroupWord& w, const GroupElement& g, Budget& budget);
GroupElement evaluate(const GroupContext& ctx, const GroupWord& w, Budget& budget);
/// Word whose evaluation is g.
GroupWord to_word(const GroupContext& ctx, const GroupElement& g);
GroupElement group_mul(const GroupContext& ctx, const GroupElement& x, const GroupElement& y, Budget& budget);

Edge act(const GroupContext& ctx, const GroupWord& w, const Edge& e, Budget& budget);
Edge act(const GroupContext& ctx, const GroupElement& g, const Edge& e, Budget& budget);
Vertex act(const GroupContext& ctx, const GroupElement& g, const Vertex& v, Budget& budget);

/// Permutation of the q+1 edges at the type-i base vertex: infinity is the
/// base edge, c is the edge x_i(c) n_i B. Throws AtomNotInParabolic for atoms
/// outside P_i.
ProjPoint local_action(const GroupContext& ctx, const Atom& a, int type, ProjPoint c);

/// Edges at gallery distance <= R from the base edge: 1 + 2q + ... + 2q^R.
std::vector<Edge> ball(std::uint32_t q, int R);
/// Vertices of the edges in ball(q, R), sorted.
std::vector<Vertex> ball_vertices(std::uint32_t q, int R);

struct OrbitReport {
  int radius = 0;
  std::size_t word_bound = 0;
  std::uint64_t group_order = 1;

  std::vector<Edge> edges;
  std::vector<int> edge_orbit;
  std::vector<std::uint64_t> edge_stabilizer;
  int edge_orbits = 0;

  std::vector<Vertex> vertices;
  std::vector<int> vertex_orbit;
  std::vector<std::uint64_t> vertex_stabilizer;
  int vertex_orbits = 0;

  std::uint64_t vertex_stabilizer_of(const Vertex& v) const;
  std::uint64_t edge_stabilizer_of(const Edge& e) const;
};

/// Enumerates the group generated by `gens` by words of length <= word_bound
/// (ExplorationTruncated if it has not closed by then) and partitions the
/// edges and vertices of ball(R) into orbits with exact stabilizer orders.
OrbitReport orbit_and_stabilizers(const GroupContext& ctx, const std::vector<GroupWord>& gens, int R,
                                  std::size_t word_bound, Budget& budget);

/// All elements of the generated group (same enumeration).
std::vector<GroupElement> enumerate_group(const GroupContext& ctx, const std::vector<GroupWord>& gens,
                                          std::size_t word_bound, Budget& budget);

} // namespace kmlat
