#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kmlat {

/// Rank-2 generalised Cartan matrix [[2, a12], [a21, 2]] with a12, a21 <= -1.
class Gcm {
public:
  /// Throws Error(BadGcm) unless both off-diagonal entries are <= -1.
  static Gcm make(int a12, int a21);

  int a12() const noexcept { return a12_; }
  int a21() const noexcept { return a21_; }

  /// Entry a_ij for i, j in {1, 2}.
  int entry(int i, int j) const;

  /// Group-level modules require max(a12, a21) <= -2.
  bool group_admissible() const noexcept { return a12_ <= -2 && a21_ <= -2; }
  bool symmetric() const noexcept { return a12_ == a21_; }
  bool affine() const noexcept { return a12_ == -2 && a21_ == -2; }

  Gcm transposed() const noexcept { return Gcm(a21_, a12_); }

  /// "2,a12;a21,2"
  std::string str() const;

  friend bool operator==(const Gcm&, const Gcm&) = default;

private:
  Gcm(int a12, int a21) : a12_(a12), a21_(a21) {}

  int a12_;
  int a21_;
};

/// A vector k1*alpha1 + k2*alpha2 of the root lattice.
struct Root {
  std::int64_t k1 = 0;
  std::int64_t k2 = 0;

  std::int64_t height() const noexcept { return k1 + k2; }
  bool positive() const noexcept { return k1 >= 0 && k2 >= 0 && (k1 | k2) != 0; }
  bool negative() const noexcept { return k1 <= 0 && k2 <= 0 && (k1 | k2) != 0; }
  bool zero() const noexcept { return k1 == 0 && k2 == 0; }
  /// Coefficient of alpha_i.
  std::int64_t coeff(int i) const noexcept { return i == 1 ? k1 : k2; }

  Root operator-() const noexcept { return {-k1, -k2}; }
  Root operator+(Root o) const noexcept { return {k1 + o.k1, k2 + o.k2}; }
  Root operator-(Root o) const noexcept { return {k1 - o.k1, k2 - o.k2}; }

  static Root simple(int i) noexcept { return i == 1 ? Root{1, 0} : Root{0, 1}; }

  /// "(k1,k2)"
  std::string str() const;

  friend auto operator<=>(const Root&, const Root&) = default;
};

/// Orders roots by height, then by k1; used for canonical syllable order.
struct RootHeightLess {
  bool operator()(const Root& a, const Root& b) const noexcept {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.k1 < b.k1;
  }
};

enum class RootClass { Pos1, Pos2, Neg1, Neg2, NotReal };

std::string to_string(RootClass c);

/// Element of the infinite dihedral Weyl group as a word over {1, 2}.
struct WeylWord {
  std::vector<int> letters;

  bool reduced() const noexcept;
  /// Cancels adjacent equal letters until none remain.
  WeylWord reduce() const;
  std::size_t length() const noexcept { return letters.size(); }

  /// Alternating word of length n starting with letter `first`.
  static WeylWord alternating(int first, std::size_t n);

  /// "w1w2w1"; the identity prints as "1".
  std::string str() const;

  friend bool operator==(const WeylWord&, const WeylWord&) = default;
};

/// Root datum of type A: coroots in a Y-basis and the pairing of the simple
/// roots with that basis. The axiom alpha_i(alpha_j^vee) = a_ji is checked.
class RootDatum {
public:
  static RootDatum simply_connected(const Gcm& gcm);
  /// coroots[j] = Y-coordinates of alpha_{j+1}^vee;
  /// pairings[i][k] = alpha_{i+1}(y_k).
  static RootDatum make(const Gcm& gcm, std::vector<std::vector<int>> coroots,
                        std::vector<std::vector<int>> pairings);

  const Gcm& gcm() const noexcept { return gcm_; }
  int rank_y() const noexcept { return rank_y_; }
  const std::vector<int>& coroot(int j) const { return coroots_.at(j - 1); }
  /// alpha_i(y_k) for the simple root alpha_i.
  int pairing(int i, int k) const { return pairings_.at(i - 1).at(k); }
  /// beta(y_k) for an arbitrary root beta.
  std::int64_t pairing(Root beta, int k) const;
  bool simply_connected() const noexcept { return simply_connected_; }

private:
  RootDatum(Gcm gcm, std::vector<std::vector<int>> coroots,
            std::vector<std::vector<int>> pairings, bool sc);

  Gcm gcm_;
  int rank_y_;
  std::vector<std::vector<int>> coroots_;
  std::vector<std::vector<int>> pairings_;
  bool simply_connected_;
};

/// w_i(r) with w_i(alpha_j) = alpha_j - a_ij alpha_i.
Root reflect(const Gcm& gcm, int i, Root r);

/// Matrix of w_i acting on (k1, k2) column vectors, row-major.
std::array<std::array<std::int64_t, 2>, 2> reflection_matrix(const Gcm& gcm, int i);

/// Apply the word right-to-left: w = w_{l0} w_{l1} ... acts as w_{l0}(w_{l1}(...)).
Root apply_word(const Gcm& gcm, const WeylWord& w, Root r);

/// First n elements of Phi_+^side in the order alpha_side, w_side alpha_other, ...
std::vector<Root> positive_roots(const Gcm& gcm, int side, std::size_t count);

/// Classification by strict height descent.
RootClass classify_root(const Gcm& gcm, Root r);

/// alpha = w(alpha_j) with w reduced (alternating); unique for real roots.
struct RootDecomposition {
  int j = 1;
  WeylWord word;
  /// First letter s of w; 0 when w is empty.
  int first_letter() const noexcept { return word.letters.empty() ? 0 : word.letters.front(); }
};

/// Decomposes any real root (positive or negative); nullopt if not real.
std::optional<RootDecomposition> decompose_root(const Gcm& gcm, Root r);

/// The pair (eps1, eps2) of +-1 signs produced by lie_signs.
struct EpsilonPair {
  int eps1 = 1;
  int eps2 = 1;
  int operator[](int i) const noexcept { return i == 1 ? eps1 : eps2; }
  friend bool operator==(const EpsilonPair&, const EpsilonPair&) = default;
};

/// eps_{i,alpha}: 1 if i != s, else eps_i^{k_t} where w_i(alpha) = k1 a1 + k2 a2.
/// Requires alpha real, positive and not simple. Throws NotRealRoot or
/// SimpleRootCase.
int epsilon_sign(const Gcm& gcm, EpsilonPair eps, int i, Root alpha);

/// Sign in n_i x_alpha(t) n_i^{-1} = x_{w_i alpha}(sign * t) for every real
/// root: the formula above for non-simple alpha (positive or negative), +1 for
/// alpha_j with j != i (e_{alpha_j} := e_j) and +1 for +-alpha_i (SL2 with
/// n = n_alpha(1)).
int relation_sign(const Gcm& gcm, EpsilonPair eps, int i, Root alpha);

/// [alpha_{i1}, w_{i1} alpha_{i2}, ...]. Throws NotReduced.
std::vector<Root> inversion_sequence(const Gcm& gcm, const WeylWord& w);

/// w1(alpha2) = alpha1 + w1 w2(alpha1), evaluated with the reflection
/// representation rho(w1) = [[-1, m], [0, 1]], rho(w2) = [[1, 0], [1, -1]],
/// m = |a21| (the transposed-matrix frame).
struct SumWitness {
  Root sum;     // w1(alpha2)
  Root first;   // alpha1
  Root second;  // w1 w2(alpha1)
  bool identity_holds = false;
  RootClass sum_class = RootClass::NotReal;
  RootClass first_class = RootClass::NotReal;
  RootClass second_class = RootClass::NotReal;
};

/// Requires a12 = -1 and a21 <= -2, else WrongMatrixShape.
SumWitness sum_of_roots_witness(const Gcm& gcm);

} // namespace kmlat
