#include "kmlat/ffield.hpp"

#include "kmlat/error.hpp"

#include <charconv>
#include <stdexcept>

namespace kmlat {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) noexcept {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t a = 0;
  while (q % p == 0) {
    q /= p;
    ++a;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(p), a);
}

namespace {

using Poly = std::vector<std::uint32_t>; // low degree first

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo monic g over F_p.
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const std::uint64_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t k = 0; k <= dg; ++k) {
      const std::uint64_t sub = lead * g[k] % p;
      f[shift + k] = static_cast<std::uint32_t>((f[shift + k] + p - sub) % p);
    }
    trim(f);
  }
  return f;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  return poly_mod(std::move(r), m, p);
}

Poly decode(std::uint64_t code, std::uint32_t p, std::uint32_t a) {
  Poly f(a, 0);
  for (std::uint32_t k = 0; k < a; ++k) {
    f[k] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  trim(f);
  return f;
}

std::uint64_t encode(const Poly& f, std::uint32_t p) {
  std::uint64_t code = 0;
  for (std::size_t k = f.size(); k-- > 0;) code = code * p + f[k];
  return code;
}

} // namespace

bool is_irreducible(const std::vector<std::uint32_t>& monic, std::uint32_t p) {
  const std::size_t deg = monic.size() - 1;
  if (deg == 0) return false;
  if (deg == 1) return true;
  // Trial division by every monic polynomial of degree 1 .. deg/2.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t k = 0; k < d; ++k) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g = decode(code, p, static_cast<std::uint32_t>(d));
      g.resize(d, 0);
      g.push_back(1);
      if (poly_mod(monic, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t a) {
  std::uint64_t count = 1;
  for (std::uint32_t k = 0; k < a; ++k) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly f = decode(code, p, a);
    f.resize(a, 0);
    f.push_back(1);
    if (is_irreducible(f, p)) return f;
  }
  throw Error(errc::bad_field, "no irreducible polynomial found");
}

Field Field::make(std::uint32_t p, std::uint32_t a, std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw Error(errc::not_prime, std::to_string(p) + " is not prime");
  if (a == 0) throw Error(errc::bad_field, "field degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t k = 0; k < a; ++k) {
    q *= p;
    if (q > kMaxFieldOrder)
      throw Error(errc::bad_field, "field order exceeds " + std::to_string(kMaxFieldOrder));
  }
  Poly m;
  if (modulus) {
    m = *modulus;
    if (m.size() == a) m.push_back(1);
    if (m.size() != a + 1 || m.back() != 1)
      throw Error(errc::bad_field, "modulus must be monic of degree " + std::to_string(a));
    for (auto c : m)
      if (c >= p) throw Error(errc::bad_field, "modulus coefficient out of range");
    if (!is_irreducible(m, p)) throw Error(errc::reducible, "modulus is reducible over F_" + std::to_string(p));
  } else {
    m = default_modulus(p, a);
  }

  auto d = std::make_shared<Data>();
  d->p = p;
  d->a = a;
  d->q = static_cast<std::uint32_t>(q);
  d->modulus = m;
  d->powers.resize(a);
  std::uint32_t pk = 1;
  for (std::uint32_t k = 0; k < a; ++k) {
    d->powers[k] = pk;
    pk *= p;
  }

  // Find a primitive element by generating its powers.
  d->exp_table.assign(q - 1, 0);
  d->log_table.assign(q, 0);
  for (std::uint64_t g = (q == 2 ? 1 : 2); g < q; ++g) {
    const Poly gp = decode(g, p, a);
    Poly cur{1};
    std::vector<bool> seen(q, false);
    bool primitive = true;
    for (std::uint64_t k = 0; k + 1 < q; ++k) {
      const auto code = encode(cur, p);
      if (seen[code]) {
        primitive = false;
        break;
      }
      seen[code] = true;
      d->exp_table[k] = static_cast<Elem>(code);
      d->log_table[code] = static_cast<std::uint32_t>(k);
      cur = poly_mul_mod(cur, gp, m, p);
    }
    if (primitive) {
      d->generator = static_cast<Elem>(g);
      return Field(std::move(d));
    }
  }
  throw Error(errc::bad_field, "no primitive element (internal error)");
}

namespace {

std::uint64_t parse_uint(const std::string& s, const std::string& what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw Error(errc::parse_error, "bad " + what + ": '" + s + "'");
  return v;
}

} // namespace

Field Field::parse(const std::string& spec) {
  const auto slash = spec.find('/');
  const std::string head = spec.substr(0, slash);
  std::optional<std::vector<std::uint32_t>> modulus;
  if (slash != std::string::npos) {
    std::vector<std::uint32_t> coeffs;
    std::string rest = spec.substr(slash + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      const auto comma = rest.find(',', pos);
      const std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      coeffs.push_back(static_cast<std::uint32_t>(parse_uint(tok, "modulus coefficient")));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    modulus = std::move(coeffs);
  }
  const auto caret = head.find('^');
  if (caret == std::string::npos) {
    const auto q = parse_uint(head, "field order");
    if (q > kMaxFieldOrder) throw Error(errc::bad_field, "field order exceeds " + std::to_string(kMaxFieldOrder));
    auto pa = prime_power(q);
    if (!pa) throw Error(errc::not_prime_power, std::to_string(q) + " is not a prime power");
    return make(pa->first, pa->second, modulus);
  }
  const auto p = parse_uint(head.substr(0, caret), "characteristic");
  const auto a = parse_uint(head.substr(caret + 1), "degree");
  if (p > kMaxFieldOrder || a > 32) throw Error(errc::bad_field, "field too large: " + spec);
  return make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(a), modulus);
}

Elem Field::from_int(std::int64_t n) const noexcept {
  const auto p = static_cast<std::int64_t>(d_->p);
  return static_cast<Elem>(((n % p) + p) % p);
}

Elem Field::element(std::uint64_t code) const {
  if (code >= d_->q)
    throw Error(errc::parse_error, "field element code " + std::to_string(code) + " >= q=" + std::to_string(d_->q));
  return static_cast<Elem>(code);
}

Elem Field::add(Elem x, Elem y) const noexcept {
  const std::uint32_t p = d_->p;
  if (p == 2) return x ^ y;
  if (d_->a == 1) return (x + y) % p;
  Elem r = 0;
  for (std::uint32_t k = 0; k < d_->a; ++k) {
    const std::uint32_t pk = d_->powers[k];
    r += ((x / pk % p + y / pk % p) % p) * pk;
  }
  return r;
}

Elem Field::neg(Elem x) const noexcept {
  const std::uint32_t p = d_->p;
  if (p == 2) return x;
  if (d_->a == 1) return (p - x) % p;
  Elem r = 0;
  for (std::uint32_t k = 0; k < d_->a; ++k) {
    const std::uint32_t pk = d_->powers[k];
    r += ((p - x / pk % p) % p) * pk;
  }
  return r;
}

Elem Field::sub(Elem x, Elem y) const noexcept { return add(x, neg(y)); }

Elem Field::mul(Elem x, Elem y) const noexcept {
  if (x == 0 || y == 0) return 0;
  const std::uint64_t s = static_cast<std::uint64_t>(d_->log_table[x]) + d_->log_table[y];
  return d_->exp_table[s % (d_->q - 1)];
}

Elem Field::inv(Elem x) const {
  if (x == 0) throw std::domain_error("inverse of zero in F_q");
  const std::uint32_t l = d_->log_table[x];
  return d_->exp_table[(d_->q - 1 - l) % (d_->q - 1)];
}

Elem Field::pow(Elem x, std::int64_t e) const {
  if (e == 0) return 1;
  if (x == 0) {
    if (e < 0) throw std::domain_error("negative power of zero in F_q");
    return 0;
  }
  const std::int64_t n = d_->q - 1;
  std::int64_t l = static_cast<std::int64_t>(d_->log_table[x]) % n;
  std::int64_t k = ((e % n) + n) % n;
  return d_->exp_table[static_cast<std::size_t>((l * k) % n)];
}

std::uint32_t Field::log(Elem x) const {
  if (x == 0) throw std::domain_error("log of zero in F_q");
  return d_->log_table[x];
}

std::vector<std::uint32_t> Field::coefficients(Elem x) const {
  std::vector<std::uint32_t> c(d_->a, 0);
  for (std::uint32_t k = 0; k < d_->a; ++k) {
    c[k] = x % d_->p;
    x /= d_->p;
  }
  return c;
}

std::string Field::spec() const {
  std::string s = std::to_string(d_->p) + "^" + std::to_string(d_->a) + "/";
  for (std::size_t k = 0; k < d_->modulus.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(d_->modulus[k]);
  }
  return s;
}

std::vector<ProjPoint> projective_line(const Field& f) {
  std::vector<ProjPoint> pts;
  pts.reserve(f.q() + 1);
  pts.push_back(ProjPoint::inf());
  for (Elem c = 0; c < f.q(); ++c) pts.push_back(ProjPoint::at(c));
  return pts;
}

} // namespace kmlat
