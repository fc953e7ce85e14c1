#pragma once

#include "kmlat/ffield.hpp"
#include "kmlat/root_datum.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace kmlat {

/// Element of H = Y (x) F^x: one nonzero coordinate per Y-basis vector, i.e.
/// h = prod_k y_k (x) c_k. For the simply connected datum h = (s, t) means
/// (alpha1^vee (x) s)(alpha2^vee (x) t).
struct TorusElement {
  std::vector<Elem> coords;

  static TorusElement identity(const RootDatum& datum) {
    return {std::vector<Elem>(static_cast<std::size_t>(datum.rank_y()), 1)};
  }
  bool is_identity() const noexcept {
    for (auto c : coords)
      if (c != 1) return false;
    return true;
  }

  friend bool operator==(const TorusElement&, const TorusElement&) = default;
  friend auto operator<=>(const TorusElement&, const TorusElement&) = default;
};

/// Throws BadRootDatum on a size mismatch or ParseError on a zero coordinate.
void validate(const RootDatum& datum, const TorusElement& h);

TorusElement torus_mul(const Field& f, const TorusElement& a, const TorusElement& b);
TorusElement torus_inv(const Field& f, const TorusElement& a);

/// beta(h) = prod_k c_k^{beta(y_k)} for any root-lattice vector beta.
Elem char_eval(const RootDatum& datum, const Field& f, Root beta, const TorusElement& h);
/// alpha_i(h).
Elem char_eval(const RootDatum& datum, const Field& f, int i, const TorusElement& h);

/// h_i(c) = alpha_i^vee (x) c.
TorusElement coroot_torus(const RootDatum& datum, const Field& f, int i, Elem c);

/// w_i(h) = h * h_i(alpha_i(h)^{-1}), the image of y (x) t under y -> w_i(y).
TorusElement weyl_act(const RootDatum& datum, const Field& f, int i, const TorusElement& h);

/// |{h in H : alpha_1(h) = alpha_2(h) = 1}| by enumerating all of H.
std::uint64_t center_order(const RootDatum& datum, const Field& f);

/// The same count from the Smith form of the pairing matrix over Z/(q-1);
/// needs only q, so it also serves q beyond the field-table bound.
std::uint64_t center_order_snf(const RootDatum& datum, std::uint64_t q);

/// Center elements themselves (for checks); same enumeration as center_order.
std::vector<TorusElement> center_elements(const RootDatum& datum, const Field& f);

/// "(c1,c2,...)"
std::string to_string(const TorusElement& h);

} // namespace kmlat
