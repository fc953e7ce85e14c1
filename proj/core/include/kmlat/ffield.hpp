#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace kmlat {

/// Elements of F_q are encoded as integers 0 .. q-1: the coefficient vector
/// (c_0, ..., c_{a-1}) of the polynomial basis maps to sum c_k p^k. In a prime
/// field the code is the residue itself.
using Elem = std::uint32_t;

/// Largest supported field order.
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

/// Finite field F_q, q = p^a, with exp/log tables. Cheap to copy (shared tables).
class Field {
public:
  /// Throws NotPrime, Reducible or BadField. Without a modulus the
  /// lexicographically smallest irreducible monic polynomial is used.
  /// `modulus` lists coefficients low degree first; a monic leading 1 may be
  /// included or omitted.
  static Field make(std::uint32_t p, std::uint32_t a,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  /// Parses "p^a", "p^a/c0,c1,..." or a bare prime power "q".
  static Field parse(const std::string& spec);

  std::uint32_t p() const noexcept { return d_->p; }
  std::uint32_t degree() const noexcept { return d_->a; }
  std::uint32_t q() const noexcept { return d_->q; }
  /// Monic modulus, low degree first, including the leading 1.
  const std::vector<std::uint32_t>& modulus() const noexcept { return d_->modulus; }
  Elem primitive() const noexcept { return d_->generator; }

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }
  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t n) const noexcept;
  /// Validates a code < q.
  Elem element(std::uint64_t code) const;

  Elem add(Elem x, Elem y) const noexcept;
  Elem sub(Elem x, Elem y) const noexcept;
  Elem neg(Elem x) const noexcept;
  Elem mul(Elem x, Elem y) const noexcept;
  /// Throws std::domain_error on zero.
  Elem inv(Elem x) const;
  Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }
  /// Negative exponents invert; 0^0 = 1.
  Elem pow(Elem x, std::int64_t e) const;

  /// Discrete log base primitive(); x must be nonzero.
  std::uint32_t log(Elem x) const;
  Elem exp(std::uint64_t k) const noexcept { return d_->exp_table[k % (d_->q - 1)]; }

  /// Coefficient vector of an element, low degree first.
  std::vector<std::uint32_t> coefficients(Elem x) const;

  /// "p^a/c0,c1,...,1" form, reproducible input for parse().
  std::string spec() const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.d_ == b.d_ || (a.d_->p == b.d_->p && a.d_->modulus == b.d_->modulus);
  }

private:
  struct Data {
    std::uint32_t p = 0, a = 0, q = 0;
    std::vector<std::uint32_t> modulus;
    Elem generator = 0;
    std::vector<Elem> exp_table;
    std::vector<std::uint32_t> log_table;
    std::vector<std::uint32_t> powers; // p^k
  };
  explicit Field(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  std::shared_ptr<const Data> d_;
};

bool is_prime(std::uint64_t n) noexcept;

/// q = p^a with p prime, or nullopt.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) noexcept;

/// Monic polynomials over F_p (low degree first) - exposed for tests.
bool is_irreducible(const std::vector<std::uint32_t>& monic, std::uint32_t p);

/// Lexicographically smallest irreducible monic polynomial of degree a.
std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t a);

/// Point of P^1(F_q): infinity or a field element.
struct ProjPoint {
  bool infinite = true;
  Elem c = 0;

  static ProjPoint inf() noexcept { return {}; }
  static ProjPoint at(Elem c) noexcept { return {false, c}; }

  /// "inf" or the element code.
  std::string str() const { return infinite ? "inf" : std::to_string(c); }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) noexcept {
    return a.infinite == b.infinite && (a.infinite || a.c == b.c);
  }
};

/// All q+1 points, infinity first.
std::vector<ProjPoint> projective_line(const Field& f);

} // namespace kmlat
