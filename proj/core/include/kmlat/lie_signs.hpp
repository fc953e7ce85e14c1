#pragma once

#include "kmlat/rational.hpp"
#include "kmlat/root_datum.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace kmlat {

/// Which root degrees the truncated algebra keeps.
enum class Window {
  Full,        ///< every (k1, k2) with |k1| + |k2| <= H
  RootStrings, ///< additionally min(|k1|, |k2|) <= 1: the alpha_i-strings through alpha_j
};

/// Basis vector of the truncated algebra: F_{beta,k}, h_i or E_{beta,k}.
struct BasisLabel {
  enum Kind { F, H, E };
  Kind kind = E;
  Root degree;    ///< positive root degree for E, its negative for F, 0 for H
  int index = 0;  ///< position inside the graded piece (for H: coroot number 1 or 2)

  /// "E(2,1)#0", "F(1,0)#0", "h1".
  std::string str() const;
};

/// Sparse vector over the global basis.
using LieVector = std::map<int, Rational>;

struct BracketResult {
  LieVector value;
  /// False when the true result lies in a degree outside the window.
  bool exact = true;
};

/// Rank-2 Kac-Moody algebra truncated to root degrees of height <= H, over Q.
///
/// n+ is the free Lie algebra on e1, e2 (Lyndon basis) modulo the ideal
/// generated by the Serre elements ad(e_i)^{1-a_ij}(e_j), computed degree by
/// degree; n- = theta(n+) for the automorphism e_i <-> f_i, h -> -h; the
/// Cartan part is spanned by h1, h2 with [e_i, f_j] = delta_ij h_i.
class TruncatedKMAlgebra {
public:
  const Gcm& gcm() const noexcept;
  int height_bound() const noexcept;
  Window window() const noexcept;

  bool in_window(Root degree) const noexcept;
  /// Dimension of g_degree inside the window; 2 for degree 0; 0 outside.
  int dim(Root degree) const;
  /// Positive degrees of the window, by height.
  std::vector<Root> positive_degrees() const;

  std::size_t size() const noexcept;
  const BasisLabel& label(int idx) const;
  /// Global index; throws std::out_of_range when absent.
  int index(BasisLabel::Kind kind, Root degree, int k = 0) const;
  int e(int i) const { return index(BasisLabel::E, Root::simple(i)); }
  int f(int i) const { return index(BasisLabel::F, -Root::simple(i)); }
  int h(int i) const { return index(BasisLabel::H, Root{}, i); }

  /// Lyndon word representing E_{beta,k} (and F_{beta,k}), letters "1"/"2".
  std::string representative(int idx) const;

  BracketResult bracket(int a, int b) const;
  BracketResult bracket(const LieVector& x, const LieVector& y) const;

  /// The automorphism e_i <-> f_i, h -> -h.
  LieVector theta(const LieVector& x) const;

  static LieVector unit(int idx) { return LieVector{{idx, Rational(1)}}; }

  struct Impl;

private:
  friend TruncatedKMAlgebra build_truncated_algebra(const Gcm&, int, Window);
  explicit TruncatedKMAlgebra(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<Impl> impl_;
};

/// Smallest admissible H: 2 (1 + max |a_ij|).
int min_height(const Gcm& gcm);

/// Throws HeightTooSmall when H < min_height(gcm).
TruncatedKMAlgebra build_truncated_algebra(const Gcm& gcm, int H, Window window = Window::Full);

/// Linear operator on the truncated algebra, one column per basis vector.
/// A missing column means the image is not certified exact at this H.
class LieOperator {
public:
  explicit LieOperator(std::vector<std::optional<LieVector>> columns) : cols_(std::move(columns)) {}
  static LieOperator identity(std::size_t n);

  std::size_t size() const noexcept { return cols_.size(); }
  const std::optional<LieVector>& column(int idx) const { return cols_.at(static_cast<std::size_t>(idx)); }
  bool certified(int idx) const { return column(idx).has_value(); }
  std::size_t certified_count() const noexcept;

  /// nullopt if v touches an uncertified column.
  std::optional<LieVector> try_apply(const LieVector& v) const;
  /// Throws TruncationLoss if v touches an uncertified column.
  LieVector apply(const LieVector& v) const;

  /// (*this) o rhs.
  LieOperator compose(const LieOperator& rhs) const;

private:
  std::vector<std::optional<LieVector>> cols_;
};

/// ad(x).
LieOperator ad(const TruncatedKMAlgebra& g, const LieVector& x);
/// exp(ad x) as a finite sum; columns where ad x is not certified nilpotent are dropped.
LieOperator exp_ad(const TruncatedKMAlgebra& g, const LieVector& x);
/// exp(ad x)(v); nullopt when a term leaves the window.
std::optional<LieVector> exp_ad_apply(const TruncatedKMAlgebra& g, const LieVector& x, const LieVector& v);

/// eta_i = exp(ad e_i) exp(ad(-f_i)) exp(ad e_i), with f_i the standard
/// Chevalley generator ([e_i, f_i] = h_i); eta_1(e_1) = -f_1.
LieOperator eta(const TruncatedKMAlgebra& g, int i);
/// eta_i(v); throws TruncationLoss if not certified.
LieVector eta_apply(const TruncatedKMAlgebra& g, int i, const LieVector& v);

/// Evidence for one sign: eta_i^2(e_j) = sign_e e_j, eta_i^2(f_j) = sign_f f_j.
struct SignCertificate {
  int i = 1;
  int j = 2;
  int sign_e = 1;
  int sign_f = 1;
  /// alpha_j, alpha_j + alpha_i, ..., alpha_j - a_ij alpha_i with their dimensions.
  std::vector<std::pair<Root, int>> string;
  int height = 0;
  /// Same sign at height + 1.
  bool stable = false;
};

struct EpsilonResult {
  EpsilonPair eps;
  std::vector<SignCertificate> certificates;
  int height = 0;
};

/// eps_i from eta_i^2(e_j) = eps_i e_j (j != i). Uses the root-string window at
/// H = min_height (or the given H) and rechecks at H + 1.
EpsilonResult epsilon_pair(const Gcm& gcm, std::optional<int> H = std::nullopt,
                           Window window = Window::RootStrings);

} // namespace kmlat
