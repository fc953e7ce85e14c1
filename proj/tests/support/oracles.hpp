#pragma once

// Independent reference implementations used by the tests. None of these
// call into the library's algorithms; they only share input data (moduli,
// Cartan entries).

#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

/// F_q by schoolbook polynomial arithmetic modulo a monic modulus (low degree
/// first, leading 1 included). Elements use the library's encoding
/// sum c_k p^k.
class Fq {
public:
  Fq(std::uint32_t p, std::vector<std::uint32_t> modulus) : p_(p), mod_(std::move(modulus)) {
    a_ = static_cast<std::uint32_t>(mod_.size() - 1);
    q_ = 1;
    for (std::uint32_t k = 0; k < a_; ++k) q_ *= p_;
  }

  std::uint32_t q() const { return q_; }
  std::uint32_t p() const { return p_; }

  std::uint32_t add(std::uint32_t x, std::uint32_t y) const {
    auto a = digits(x), b = digits(y);
    for (std::uint32_t k = 0; k < a_; ++k) a[k] = (a[k] + b[k]) % p_;
    return code(a);
  }
  std::uint32_t neg(std::uint32_t x) const {
    auto a = digits(x);
    for (auto& d : a) d = (p_ - d) % p_;
    return code(a);
  }
  std::uint32_t sub(std::uint32_t x, std::uint32_t y) const { return add(x, neg(y)); }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
    const auto a = digits(x), b = digits(y);
    std::vector<std::uint64_t> r(2 * a_, 0);
    for (std::uint32_t i = 0; i < a_; ++i)
      for (std::uint32_t j = 0; j < a_; ++j) r[i + j] = (r[i + j] + std::uint64_t(a[i]) * b[j]) % p_;
    for (std::size_t d = r.size(); d-- > a_;) {
      const auto c = r[d];
      if (c == 0) continue;
      for (std::uint32_t k = 0; k <= a_; ++k) {
        const std::size_t at = d - a_ + k;
        r[at] = (r[at] + (p_ - c % p_) * mod_[k]) % p_;
      }
    }
    std::vector<std::uint32_t> out(a_);
    for (std::uint32_t k = 0; k < a_; ++k) out[k] = static_cast<std::uint32_t>(r[k]);
    return code(out);
  }
  std::uint32_t pow(std::uint32_t x, std::int64_t e) const {
    if (e < 0) return pow(inv(x), -e);
    std::uint32_t r = 1;
    for (std::int64_t k = 0; k < e; ++k) r = mul(r, x);
    return r;
  }
  /// Brute-force inverse; nullopt-free because callers never invert 0.
  std::uint32_t inv(std::uint32_t x) const {
    for (std::uint32_t y = 1; y < q_; ++y)
      if (mul(x, y) == 1) return y;
    return 0;
  }

private:
  std::vector<std::uint32_t> digits(std::uint32_t x) const {
    std::vector<std::uint32_t> d(a_);
    for (std::uint32_t k = 0; k < a_; ++k, x /= p_) d[k] = x % p_;
    return d;
  }
  std::uint32_t code(const std::vector<std::uint32_t>& d) const {
    std::uint32_t x = 0;
    for (std::uint32_t k = a_; k-- > 0;) x = x * p_ + d[k];
    return x;
  }

  std::uint32_t p_, a_, q_;
  std::vector<std::uint32_t> mod_;
};

/// Side-`side` positive real roots alpha_s, s_s(alpha_t), s_s s_t(alpha_s), ...
/// computed with explicit integer reflection matrices.
inline std::vector<std::array<std::int64_t, 2>> side_roots(int a12, int a21, int side, std::size_t count) {
  auto s1 = [&](std::array<std::int64_t, 2> r) { return std::array<std::int64_t, 2>{-r[0] - a12 * r[1], r[1]}; };
  auto s2 = [&](std::array<std::int64_t, 2> r) { return std::array<std::int64_t, 2>{r[0], -r[1] - a21 * r[0]}; };
  std::vector<std::array<std::int64_t, 2>> out;
  for (std::size_t n = 0; n < count; ++n) {
    // word of length n alternating from `side`, applied to the simple root
    // of type `side` (n even) or the other type (n odd)
    const bool odd = n % 2 == 1;
    const int j = odd ? 3 - side : side;
    std::array<std::int64_t, 2> r = j == 1 ? std::array<std::int64_t, 2>{1, 0} : std::array<std::int64_t, 2>{0, 1};
    for (std::size_t k = n; k-- > 0;) {
      const int letter = k % 2 == 0 ? side : 3 - side;
      r = letter == 1 ? s1(r) : s2(r);
    }
    out.push_back(r);
  }
  return out;
}

/// eta_i^2 acts on the root space of beta by (-1)^{beta(alpha_i^vee)}; for
/// beta = alpha_j this is (-1)^{a_ij}.
inline std::pair<int, int> epsilon_by_parity(int a12, int a21) {
  return {a12 % 2 == 0 ? 1 : -1, a21 % 2 == 0 ? 1 : -1};
}

/// |{t in (F_q^*)^2 : alpha_i(t) = 1}| for the simply connected datum, where
/// alpha_i(t1, t2) = t1^{a_1i} t2^{a_2i}.
inline std::uint64_t center_brute(const Fq& f, int a12, int a21) {
  const int a[3][3] = {{0, 0, 0}, {0, 2, a12}, {0, a21, 2}};
  std::uint64_t n = 0;
  for (std::uint32_t t1 = 1; t1 < f.q(); ++t1)
    for (std::uint32_t t2 = 1; t2 < f.q(); ++t2) {
      bool ok = true;
      for (int i = 1; i <= 2 && ok; ++i) ok = f.mul(f.pow(t1, a[1][i]), f.pow(t2, a[2][i])) == 1;
      if (ok) ++n;
    }
  return n;
}

/// 2x2 matrix over F_q acting on P^1 = {[x:y]}; the point c is [c:1] and
/// infinity is [1:0].
struct Mat2 {
  std::uint32_t a, b, c, d;
};

inline Mat2 mat_mul(const Fq& f, Mat2 x, Mat2 y) {
  return {f.add(f.mul(x.a, y.a), f.mul(x.b, y.c)), f.add(f.mul(x.a, y.b), f.mul(x.b, y.d)),
          f.add(f.mul(x.c, y.a), f.mul(x.d, y.c)), f.add(f.mul(x.c, y.b), f.mul(x.d, y.d))};
}

/// Image of a point (nullopt = infinity) under the Moebius action.
inline std::optional<std::uint32_t> mobius(const Fq& f, Mat2 m, std::optional<std::uint32_t> pt) {
  std::uint32_t x = 1, y = 0;
  if (pt) {
    x = *pt;
    y = 1;
  }
  const std::uint32_t nx = f.add(f.mul(m.a, x), f.mul(m.b, y));
  const std::uint32_t ny = f.add(f.mul(m.c, x), f.mul(m.d, y));
  if (ny == 0) return std::nullopt;
  return f.mul(nx, f.inv(ny));
}

inline Mat2 upper(std::uint32_t s) { return {1, s, 0, 1}; }
inline Mat2 lower(const Fq& f, std::uint32_t s) { return {1, 0, f.neg(s), 1}; }
/// n = x(1) x_-(1) x(1).
inline Mat2 weyl(const Fq& f) { return mat_mul(f, mat_mul(f, upper(1), lower(f, 1)), upper(1)); }

/// Cauchy: a finite group has an element of order p iff p divides its order.
inline bool cauchy(std::size_t order, std::uint64_t p) { return order % p == 0; }

/// Orders of all elements of a multiplication table with identity e.
inline std::vector<std::uint64_t> element_orders(const std::vector<std::vector<int>>& t) {
  int e = 0;
  for (int a = 0; a < static_cast<int>(t.size()); ++a)
    if (t[a][a] == a) e = a;
  std::vector<std::uint64_t> out;
  for (int a = 0; a < static_cast<int>(t.size()); ++a) {
    std::uint64_t k = 1;
    for (int x = a; x != e; x = t[x][a]) ++k;
    out.push_back(k);
  }
  return out;
}

} // namespace oracle
