#pragma once

#include "kmlat/ffield.hpp"
#include "kmlat/root_datum.hpp"
#include "kmlat/torus.hpp"

#include <cstdint>
#include <map>
#include <variant>
#include <vector>

namespace kmlat {

/// Element of the abelian group U_side = sum of U_alpha over alpha in
/// Phi_+^side, stored as its nonzero root coordinates.
struct Syllable {
  int side = 1;
  std::map<Root, Elem, RootHeightLess> coords;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Alternating normal form in U = U_1 * U_2; the empty word is the identity.
struct UWord {
  std::vector<Syllable> syllables;

  bool identity() const noexcept { return syllables.empty(); }
  std::size_t length() const noexcept { return syllables.size(); }

  friend bool operator==(const UWord&, const UWord&) = default;
};

/// x_alpha(c) for a positive real root alpha. Throws NotRealRoot otherwise.
UWord root_element(const Gcm& gcm, Root alpha, Elem c);

/// Side of a positive real root (1 or 2). Throws NotRealRoot otherwise.
int root_side(const Gcm& gcm, Root alpha);

/// Normal form of the concatenation; merges equal-side syllables and drops
/// zero coordinates and empty syllables.
UWord u_mul(const Field& f, const UWord& x, const UWord& y);
UWord u_inv(const Field& f, const UWord& x);
/// x^n for n >= 0.
UWord u_pow(const Field& f, const UWord& x, std::uint64_t n);

/// Canonicalizes an arbitrary syllable sequence (used by parsers).
UWord normalize(const Field& f, std::vector<Syllable> syllables);

enum class TorsionKind { Identity, PPowerInFactorConjugate, Infinite };

struct TorsionInfo {
  TorsionKind kind = TorsionKind::Identity;
  /// x = conjugator * core * conjugator^{-1} with core cyclically reduced.
  UWord conjugator;
  UWord core;
  /// 1 for the identity, p for a conjugate of a nontrivial factor element,
  /// 0 for infinite order.
  std::uint64_t order = 1;
};

TorsionInfo torsion_class(const Field& f, const UWord& x);

/// The homomorphism U -> F killing every U_alpha with alpha != alpha_i.
Elem retraction(const Field& f, int i, const UWord& x);

/// h x h^{-1}: the coordinate at alpha is multiplied by alpha(h).
UWord conj_by_torus(const RootDatum& datum, const Field& f, const TorusElement& h, const UWord& x);

/// Returned by conj_by_n when the word has an alpha_i coordinate.
struct NeedsSL2 {
  int i = 1;
};

/// n_i x n_i^{-1}, coordinatewise by n_i x_alpha(t) n_i^{-1} = x_{w_i alpha}(eps_{i,alpha} t).
std::variant<UWord, NeedsSL2> conj_by_n(const Gcm& gcm, EpsilonPair eps, const Field& f, int i,
                                        const UWord& x);
/// n_i^{-1} x n_i.
std::variant<UWord, NeedsSL2> conj_by_n_inv(const Gcm& gcm, EpsilonPair eps, const Field& f, int i,
                                            const UWord& x);

/// Element of B = U x| H, written u h.
struct BElement {
  UWord u;
  TorusElement h;

  friend bool operator==(const BElement&, const BElement&) = default;
};

BElement b_identity(const RootDatum& datum);
BElement b_mul(const RootDatum& datum, const Field& f, const BElement& x, const BElement& y);
BElement b_inv(const RootDatum& datum, const Field& f, const BElement& x);

} // namespace kmlat
